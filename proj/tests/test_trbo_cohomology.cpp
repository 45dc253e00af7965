#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "trbo_cohomology.hpp"

using namespace l3kit;
using fixtures::Rng;

namespace {

struct Fixture {
    TwistedSetup s;
    LinearOperator t;
};

std::vector<Fixture> all_fixtures() {
    std::vector<Fixture> out;
    out.push_back({fixtures::t_setup(), fixtures::t_op()});
    out.push_back({reynolds_setup(fixtures::a1()), fixtures::r_op()});
    out.push_back({nijenhuis_setup(nijenhuis_package(fixtures::a1(), fixtures::n_op())), identity_operator(2)});
    out.push_back({fixtures::big_setup(), fixtures::big_t()});
    out.push_back({fixtures::small_setup(), fixtures::small_t()});
    return out;
}

} // namespace

TEST_CASE("induced actions form a representation of the induced algebra") {
    // a zero setup induces the zero representation
    ThreeLeibnizAlgebra abelian{1, DenseTensor({1, 1, 1, 1})};
    Representation zero{abelian, 1, DenseTensor({1, 1, 1, 1}), DenseTensor({1, 1, 1, 1}), DenseTensor({1, 1, 1, 1})};
    TwistedSetup s0 = make_setup(zero, zero_cochain(2, Direction::g_to_V, 1, 1));
    InducedRep ir0 = induced_rep(s0, zero_operator(1, 1));
    CHECK(ir0.rho_l.is_zero());
    CHECK(ir0.on_v.bracket.is_zero());

    for (const auto& [s, t] : all_fixtures()) {
        InducedRep ir = induced_rep(s, t);
        CHECK(check_3leibniz(ir.on_v).ok);
        CHECK(check_representation(induced_rep_as_representation(ir)).ok);
    }

    LinearOperator bad = fixtures::t_op();
    bad.matrix.at(0, 1) = Scalar(7);
    CHECK_THROWS_AS(induced_rep(fixtures::t_setup(), bad), precondition_error);
}

TEST_CASE("the identity fixture induces the adjoint data back") {
    TwistedSetup s = fixtures::t_setup();
    InducedRep ir = induced_rep(s, fixtures::t_op());
    CHECK(ir.on_v.bracket == fixtures::a1().bracket);
    CHECK(ir.rho_l == fixtures::a1().bracket);
    CHECK(ir.rho_m == fixtures::a1().bracket);
    CHECK(ir.rho_r == fixtures::a1().bracket);
}

TEST_CASE("twisted coboundary matches the direct transcription at degree 1") {
    Rng rng(113);
    for (const auto& [s, t] : all_fixtures()) {
        const int d = s.rep.algebra.dim, v = s.rep.dimV;
        CHECK(delta_T(s, t, zero_cochain(1, Direction::V_to_g, v, d)).coeffs.is_zero());
        for (int it = 0; it < 4; ++it) {
            Cochain f = fixtures::random_cochain(rng, 1, Direction::V_to_g, v, d, 30);
            CHECK(delta_T(s, t, f).coeffs == oracle::delta_t1(s, t, f).coeffs);
        }
    }
}

TEST_CASE("twisted coboundary squares to zero") {
    Rng rng(127);
    for (const auto& [s, t] : all_fixtures()) {
        const int d = s.rep.algebra.dim, v = s.rep.dimV;
        for (int n = 1; n <= 2; ++n)
            for (int it = 0; it < 3; ++it) {
                Cochain f = fixtures::random_cochain(rng, n, Direction::V_to_g, v, d, 50);
                CHECK(delta_T(s, t, delta_T(s, t, f)).coeffs.is_zero());
            }
    }
}

TEST_CASE("degree-zero map") {
    TwistedSetup s = fixtures::t_setup();
    LinearOperator t = fixtures::t_op();

    DegreeZeroCochain zero{Matrix(2, 2)};
    CHECK(wp(s, t, zero).coeffs.is_zero());

    // wp(e1(x)e1)(u) = -2 mu(e1,e1,u) here
    DegreeZeroCochain e00{Matrix(2, 2)};
    e00.tensor.at(0, 0) = Scalar(1);
    Cochain w = wp(s, t, e00);
    CHECK(w.coeffs.at(std::vector<int>{0, 1}) == Scalar(-2));
    CHECK(w.coeffs.at(std::vector<int>{0, 0}) == Scalar(0));
    CHECK(w.coeffs.at(std::vector<int>{1, 0}) == Scalar(0));
    CHECK(w.coeffs.at(std::vector<int>{1, 1}) == Scalar(0));

    // always a 1-cocycle of the twisted complex
    Rng rng(131);
    for (const auto& [s2, t2] : all_fixtures()) {
        const int d = s2.rep.algebra.dim;
        for (int it = 0; it < 4; ++it) {
            DegreeZeroCochain a{Matrix(d, d)};
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) a.tensor.at(i, j) = rng.small_scalar(40);
            CHECK(delta_T(s2, t2, wp(s2, t2, a)).coeffs.is_zero());
        }
    }
}

TEST_CASE("full twisted differential") {
    Rng rng(137);
    TwistedSetup s = fixtures::t_setup();
    LinearOperator t = fixtures::t_op();
    for (int it = 0; it < 4; ++it) {
        DegreeZeroCochain a{Matrix(2, 2)};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) a.tensor.at(i, j) = rng.small_scalar(30);
        Cochain w = partial_T(s, t, a);
        CHECK(partial_T(s, t, w).coeffs.is_zero());
    }
    Cochain f = fixtures::random_cochain(rng, 1, Direction::V_to_g, 2, 2, 40);
    CHECK(partial_T(s, t, f).coeffs == delta_T(s, t, f).coeffs);
}

TEST_CASE("twisted cohomology dimensions") {
    // zero setup: nothing differentiates, so the groups are whole cochain
    // spaces except at degree 1 where nothing bounds either
    ThreeLeibnizAlgebra abelian{2, DenseTensor({2, 2, 2, 2})};
    Representation zero{abelian, 2, DenseTensor({2, 2, 2, 2}), DenseTensor({2, 2, 2, 2}), DenseTensor({2, 2, 2, 2})};
    TwistedSetup s0 = make_setup(zero, zero_cochain(2, Direction::g_to_V, 2, 2));
    LinearOperator t0 = zero_operator(2, 2);
    CHECK(cohomology_dim_T(s0, t0, 1) == 4);  // dim Hom(V,g)
    CHECK(cohomology_dim_T(s0, t0, 2) == 16); // dim C^2

    // frozen values for the identity fixture (independently recomputed: the
    // twisted complex coincides with the adjoint complex, and the degree-0
    // map has rank 1)
    TwistedSetup s = fixtures::t_setup();
    LinearOperator t = fixtures::t_op();
    CHECK(rank(wp_matrix(s, t)) == 1);
    CHECK(cohomology_dim_T(s, t, 1) == 1);
    CHECK(cohomology_dim_T(s, t, 2) == 3);

    for (const auto& [s2, t2] : all_fixtures()) {
        CHECK(cohomology_dim_T(s2, t2, 1) >= 0);
        CHECK(cohomology_dim_T(s2, t2, 2) >= 0);
    }
    CHECK(cohomology_dim_T(fixtures::small_setup(), fixtures::small_t(), 2) == 0);
}

TEST_CASE("twisted differential equals the derived-bracket differential") {
    Rng rng(139);
    for (const auto& [s, t] : all_fixtures()) {
        BigStructure b = build_pi(s);
        const int d = s.rep.algebra.dim, v = s.rep.dimV;
        for (int n = 1; n <= 2; ++n)
            for (int it = 0; it < 3; ++it) {
                Cochain f = fixtures::random_cochain(rng, n, Direction::V_to_g, v, d, 40);
                Cochain lhs = l1_t(b, t, f);
                Cochain rhs = delta_T(s, t, f);
                if (n % 2 == 0) rhs.coeffs *= Scalar(-1);
                CHECK(lhs.coeffs == rhs.coeffs);
            }
    }
}
