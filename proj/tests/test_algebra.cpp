#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace l3kit;
using fixtures::Rng;

namespace {

DenseTensor bracket3(int d) { return DenseTensor({d, d, d, d}); }

Representation broken_rep() {
    // adjoint of a1 with one action entry corrupted
    Representation r = fixtures::a1_adjoint();
    r.rho_m.at(std::vector<int>{0, 0, 0, 0}) = Scalar(1);
    return r;
}

// Semidirect tensor assembled without the validity gate, to probe the
// only-if direction of the product criterion.
ThreeLeibnizAlgebra semidirect_raw(const Representation& r) {
    Cochain zero_phi = zero_cochain(2, Direction::g_to_V, r.algebra.dim, r.dimV);
    return twisted_semidirect_raw(r, zero_phi);
}

} // namespace

TEST_CASE("fundamental identity check") {
    CHECK(check_3leibniz(bracket3(3)).ok);
    CHECK(check_3leibniz(fixtures::a1()).ok);

    DenseTensor bad = bracket3(2);
    bad.at(std::vector<int>{0, 0, 0, 0}) = Scalar(1); // [e1,e1,e1] = e1
    Report r = check_3leibniz(bad);
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].tuple == Index{0, 0, 0, 0, 0});
    CHECK(r.violations[0].lhs == Vec{Scalar(1), Scalar(0)});
    CHECK(r.violations[0].rhs == Vec{Scalar(3), Scalar(0)});
    CHECK(r.checked == 32);

    CHECK_THROWS_AS(check_3leibniz(DenseTensor({2, 2, 2})), dim_error);
}

TEST_CASE("left Leibniz identity check") {
    CHECK(check_leibniz(DenseTensor({2, 2, 2})).ok);

    DenseTensor ok = DenseTensor({2, 2, 2});
    ok.at(std::vector<int>{0, 0, 1}) = Scalar(1); // [e1,e1] = e2
    CHECK(check_leibniz(ok).ok);

    DenseTensor bad = DenseTensor({2, 2, 2});
    bad.at(std::vector<int>{0, 0, 0}) = Scalar(1); // [e1,e1] = e1
    Report r = check_leibniz(bad);
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].lhs == Vec{Scalar(1), Scalar(0)});
    CHECK(r.violations[0].rhs == Vec{Scalar(2), Scalar(0)});
}

TEST_CASE("ternary bracket from a Leibniz algebra") {
    LeibnizAlgebra zero{2, DenseTensor({2, 2, 2})};
    CHECK(threeleibniz_from_leibniz(zero).bracket.is_zero());

    LeibnizAlgebra nil{2, DenseTensor({2, 2, 2})};
    nil.bracket.at(std::vector<int>{0, 0, 1}) = Scalar(1);
    CHECK(threeleibniz_from_leibniz(nil).bracket.is_zero());

    LeibnizAlgebra bad{2, DenseTensor({2, 2, 2})};
    bad.bracket.at(std::vector<int>{0, 0, 0}) = Scalar(1);
    CHECK_THROWS_AS(threeleibniz_from_leibniz(bad), precondition_error);

    Rng rng(5);
    for (int it = 0; it < 10; ++it) {
        LeibnizAlgebra l = fixtures::random_nilpotent_leibniz(rng, rng.uniform(2, 3), 2);
        REQUIRE(check_leibniz(l).ok);
        CHECK(check_3leibniz(threeleibniz_from_leibniz(l)).ok);
    }
}

TEST_CASE("Leibniz bracket on the tensor square") {
    ThreeLeibnizAlgebra abelian{2, bracket3(2)};
    CHECK(leibniz_on_tensor_square(abelian).bracket.is_zero());

    LeibnizAlgebra sq = leibniz_on_tensor_square(fixtures::a1());
    CHECK(sq.dim == 4);
    // [e1(x)e1, e1(x)e1] = e2(x)e1 + e1(x)e2 -> indices 2 and 1
    CHECK(sq.bracket.at(std::vector<int>{0, 0, 2}) == Scalar(1));
    CHECK(sq.bracket.at(std::vector<int>{0, 0, 1}) == Scalar(1));
    CHECK(sq.bracket.at(std::vector<int>{0, 0, 0}) == Scalar(0));
    // [e1(x)e1, e2(x)e2] = 0
    for (int l = 0; l < 4; ++l) CHECK(sq.bracket.at(std::vector<int>{0, 3, l}) == Scalar(0));
    CHECK(check_leibniz(sq).ok);

    Rng rng(6);
    for (int it = 0; it < 10; ++it) {
        ThreeLeibnizAlgebra a = fixtures::random_nilpotent_algebra(rng, rng.uniform(2, 3), 2);
        REQUIRE(check_3leibniz(a).ok);
        CHECK(check_leibniz(leibniz_on_tensor_square(a)).ok);
    }
}

TEST_CASE("representation identities") {
    Rng rng(7);
    ThreeLeibnizAlgebra a = fixtures::random_nilpotent_algebra(rng, 3, 2);
    Representation zero{a, 2, DenseTensor({3, 3, 2, 2}), DenseTensor({3, 2, 3, 2}), DenseTensor({2, 3, 3, 2})};
    CHECK(check_representation(zero).ok);

    CHECK(check_representation(fixtures::a1_adjoint()).ok);

    // adjoint left action alone also satisfies the identities here
    Representation lonly = fixtures::a1_adjoint();
    lonly.rho_m = DenseTensor({2, 2, 2, 2});
    lonly.rho_r = DenseTensor({2, 2, 2, 2});
    CHECK(check_representation(lonly).ok);

    Report r = check_representation(broken_rep());
    CHECK_FALSE(r.ok);

    Representation bad_shape = fixtures::a1_adjoint();
    bad_shape.dimV = 3;
    CHECK_THROWS_AS(check_representation(bad_shape), dim_error);
}

TEST_CASE("adjoint representation") {
    ThreeLeibnizAlgebra abelian{3, bracket3(3)};
    Representation adj0 = adjoint_rep(abelian);
    CHECK(adj0.rho_l.is_zero());
    CHECK(adj0.dimV == 3);

    Representation adj = fixtures::a1_adjoint();
    CHECK(adj.dimV == adj.algebra.dim);
    CHECK(adj.rho_l.at(std::vector<int>{0, 0, 0, 1}) == Scalar(1));
    Scalar sum;
    for (std::size_t i = 0; i < adj.rho_l.size(); ++i)
        if (!adj.rho_l.flat(i).is_zero()) sum += Scalar(1);
    CHECK(sum == Scalar(1)); // single nonzero structure constant
    CHECK(check_representation(adj).ok);
}

TEST_CASE("semidirect product") {
    ThreeLeibnizAlgebra abelian{2, bracket3(2)};
    Representation zero{abelian, 1, DenseTensor({2, 2, 1, 1}), DenseTensor({2, 1, 2, 1}), DenseTensor({1, 2, 2, 1})};
    ThreeLeibnizAlgebra prod = semidirect_product(zero);
    CHECK(prod.dim == 3);
    CHECK(prod.bracket.is_zero());

    ThreeLeibnizAlgebra sp = semidirect_product(fixtures::a1_adjoint());
    CHECK(sp.dim == 4);
    CHECK(check_3leibniz(sp).ok);
    // [(e1,0),(e1,0),(e1,0)] = (e2,0)
    CHECK(sp.bracket.at(std::vector<int>{0, 0, 0, 1}) == Scalar(1));
    CHECK(sp.bracket.at(std::vector<int>{0, 0, 0, 3}) == Scalar(0));
    // [(e1,0),(e1,0),(0,e1)] = (0,e2): V indices start at 2
    CHECK(sp.bracket.at(std::vector<int>{0, 0, 2, 3}) == Scalar(1));
    CHECK(sp.bracket.at(std::vector<int>{0, 0, 2, 1}) == Scalar(0));

    CHECK_THROWS_AS(semidirect_product(broken_rep()), precondition_error);
}

TEST_CASE("product passes the fundamental identity iff the actions form a representation") {
    Rng rng(8);
    int broken_seen = 0;
    for (int it = 0; it < 20; ++it) {
        Representation r = fixtures::random_representation(rng, 3, 2);
        if (rng.chance(50)) {
            // corrupt one random action entry
            DenseTensor& target = (it % 3 == 0) ? r.rho_l : (it % 3 == 1 ? r.rho_m : r.rho_r);
            target.flat(static_cast<std::size_t>(rng.uniform(0, static_cast<int>(target.size()) - 1))) +=
                Scalar(rng.uniform(1, 2));
        }
        const bool valid = check_representation(r).ok;
        CHECK(check_3leibniz(semidirect_raw(r)).ok == valid);
        if (!valid) ++broken_seen;
    }
    CHECK(broken_seen > 0);
}

TEST_CASE("representation induced from a Leibniz representation") {
    LeibnizAlgebra nil{2, DenseTensor({2, 2, 2})};
    nil.bracket.at(std::vector<int>{0, 0, 1}) = Scalar(1);

    LeibnizRepresentation zero{nil, 2, DenseTensor({2, 2, 2}), DenseTensor({2, 2, 2})};
    Representation r0 = rep_from_leibniz_rep(zero);
    CHECK(r0.rho_l.is_zero());
    CHECK(r0.rho_m.is_zero());
    CHECK(r0.rho_r.is_zero());

    // regular representation: both actions are the bracket itself
    LeibnizRepresentation reg{nil, 2, nil.bracket, nil.bracket};
    REQUIRE(check_leibniz_representation(reg).ok);
    Representation rr = rep_from_leibniz_rep(reg);
    CHECK(check_representation(rr).ok);
    // rho^l(e1,e1,.) = rho^L([e1,e1],.) = [e2,.] = 0
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(rr.rho_l.at(std::vector<int>{0, 0, a, b}) == Scalar(0));

    Rng rng(9);
    for (int it = 0; it < 8; ++it) {
        LeibnizAlgebra l = fixtures::random_nilpotent_leibniz(rng, 2, 1);
        LeibnizRepresentation lr{l, 2, l.bracket, l.bracket};
        if (!check_leibniz_representation(lr).ok) continue;
        CHECK(check_representation(rep_from_leibniz_rep(lr)).ok);
    }
}
