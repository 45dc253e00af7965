#include "selftest.hpp"

#include "deformation.hpp"
#include "fixtures.hpp"
#include "graded.hpp"
#include "trbo_cohomology.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace l3kit {

using fixtures::Rng;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

GradedElement random_graded(Rng& rng, int degree, int dim, int zero_percent) {
    GradedElement e = zero_graded(degree, dim);
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) e.coeffs.flat(i) = rng.small_scalar(zero_percent);
    return e;
}

// criterion 1: delta o delta = 0 on random valid representations
void complex_property(Check& c) {
    Rng rng(101);
    int done = 0;
    for (int it = 0; it < 40 && done < 20; ++it) {
        Representation r = fixtures::random_representation(rng, 3, 2);
        if (!check_representation(r).ok) {
            c.require(false, "random representation invalid");
            continue;
        }
        ModuleData md = module_of(r);
        Matrix d1 = coboundary_matrix(md, 1);
        Matrix d2 = coboundary_matrix(md, 2);
        c.require(d2.mul(d1).is_zero(), "delta2 * delta1 != 0");
        if (r.algebra.dim <= 2) {
            Matrix d3 = coboundary_matrix(md, 3);
            c.require(d3.mul(d2).is_zero(), "delta3 * delta2 != 0");
        }
        ++done;
    }
    c.require(done >= 20, "fewer than 20 representations exercised");
    c.detail << "reps=" << done;
}

// criterion 2: graph criterion == twisted Rota-Baxter identity
void graph_criterion(Check& c) {
    Rng rng(202);
    std::vector<TwistedSetup> setups;
    setups.push_back(fixtures::t_setup());
    setups.push_back(reynolds_setup(fixtures::a1()));
    for (int i = 0; i < 2; ++i) {
        Representation adj = fixtures::a1_adjoint();
        Cochain phi = fixtures::random_closed_two_cochain(rng, adj);
        setups.push_back(make_setup(std::move(adj), std::move(phi)));
    }
    int tried = 0, agreements = 0, positives = 0;
    for (const auto& s : setups) {
        const int d = s.rep.algebra.dim, v = s.rep.dimV;
        std::vector<LinearOperator> ops = {zero_operator(v, d), identity_operator(d)};
        for (int i = 0; i < 28; ++i) ops.push_back(fixtures::random_operator(rng, v, d));
        for (const auto& t : ops) {
            const bool direct = check_trbo(s, t).ok;
            const bool graph = check_graph_subalgebra(s, t);
            ++tried;
            if (direct == graph) ++agreements;
            if (direct) ++positives;
        }
    }
    c.require(tried >= 100, "fewer than 100 operators tried");
    c.require(agreements == tried, "graph criterion disagreed with the identity");
    c.require(positives >= 2, "no positive instances exercised");
    c.detail << "tried=" << tried << " positives=" << positives;
}

// criterion 3: Maurer-Cartan residual vanishes exactly on twisted
// Rota-Baxter operators and only on them
void maurer_cartan_equivalence(Check& c) {
    Rng rng(303);
    auto fix_t = fixtures::t_setup();
    auto nij = nijenhuis_package(fixtures::a1(), fixtures::n_op());
    struct Case {
        TwistedSetup s;
        LinearOperator t;
    };
    std::vector<Case> rbos;
    rbos.push_back({fix_t, fixtures::t_op()});
    rbos.push_back({fix_t, zero_operator(2, 2)});
    rbos.push_back({reynolds_setup(fixtures::a1()), fixtures::r_op()});
    rbos.push_back({nijenhuis_setup(nij), identity_operator(2)});
    rbos.push_back({fixtures::big_setup(), fixtures::big_t()});
    for (const auto& [s, t] : rbos) {
        BigStructure b = build_pi(s);
        c.require(check_trbo(s, t).ok, "fixture is not a twisted Rota-Baxter operator");
        c.require(mc_residual(b, t).coeffs.is_zero(), "residual nonzero on a twisted Rota-Baxter operator");
    }
    BigStructure b = build_pi(fix_t);
    int nonexamples = 0, tried = 0;
    while (tried < 60) {
        LinearOperator t = fixtures::random_operator(rng, 2, 2);
        ++tried;
        const bool is_rbo = check_trbo(fix_t, t).ok;
        Cochain mc = mc_residual(b, t);
        c.require(mc.coeffs.is_zero() == is_rbo, "residual/identity mismatch");
        c.require(mc.coeffs == trbo_defect(fix_t, t).coeffs, "residual differs from the identity defect");
        if (!is_rbo) ++nonexamples;
    }
    c.require(nonexamples >= 50, "fewer than 50 non-examples");
    c.detail << "nonexamples=" << nonexamples;
}

// criterion 4: pi squares to zero; graded antisymmetry and Jacobi
void graded_engine(Check& c) {
    Rng rng(404);
    std::vector<TwistedSetup> setups;
    setups.push_back(fixtures::t_setup());
    setups.push_back(reynolds_setup(fixtures::a1()));
    setups.push_back(nijenhuis_setup(nijenhuis_package(fixtures::a1(), fixtures::n_op())));
    setups.push_back(fixtures::big_setup());
    setups.push_back(fixtures::small_setup());
    for (int i = 0; i < 3; ++i) setups.push_back(fixtures::random_setup(rng, 3, 2));
    for (const auto& s : setups) {
        try {
            build_pi(s); // asserts [pi,pi] = 0
        } catch (const std::logic_error&) {
            c.require(false, "[pi,pi] != 0");
        }
    }
    int triples = 0;
    for (int it = 0; it < 24; ++it) {
        const int dim = (it % 3 == 0) ? 3 : 2;
        int dp = rng.uniform(0, 2), dq = rng.uniform(0, 2), dr = rng.uniform(0, 2);
        if (dim == 3) {
            dp = rng.uniform(0, 1);
            dq = rng.uniform(0, 1);
            dr = rng.uniform(0, 1);
        } else if (dp + dq + dr > 5) {
            dr = 0;
        }
        GradedElement p = random_graded(rng, dp, dim, 70);
        GradedElement q = random_graded(rng, dq, dim, 70);
        GradedElement r = random_graded(rng, dr, dim, 70);
        const int spq = (dp * dq % 2 == 0) ? 1 : -1;
        GradedElement pq = graded_bracket(p, q);
        GradedElement qp = graded_bracket(q, p);
        qp.coeffs *= Scalar(-spq);
        c.require(pq.coeffs == qp.coeffs, "graded antisymmetry failed");
        GradedElement lhs = graded_bracket(p, graded_bracket(q, r));
        GradedElement rhs = graded_bracket(pq, r);
        GradedElement t2 = graded_bracket(q, graded_bracket(p, r));
        t2.coeffs *= Scalar(spq);
        rhs.coeffs += t2.coeffs;
        c.require(lhs.coeffs == rhs.coeffs, "graded Jacobi failed");
        ++triples;
    }
    c.detail << "setups=" << setups.size() << " triples=" << triples;
}

// criterion 5: l1^T f = (-1)^(n-1) partial_T f
void twisted_differential_consistency(Check& c) {
    Rng rng(505);
    std::vector<std::pair<TwistedSetup, LinearOperator>> cases;
    cases.emplace_back(fixtures::t_setup(), fixtures::t_op());
    cases.emplace_back(nijenhuis_setup(nijenhuis_package(fixtures::a1(), fixtures::n_op())), identity_operator(2));
    int fs = 0;
    for (const auto& [s, t] : cases) {
        BigStructure b = build_pi(s);
        const int d = s.rep.algebra.dim, v = s.rep.dimV;
        for (int n = 1; n <= 2; ++n)
            for (int i = 0; i < 10; ++i) {
                Cochain f = fixtures::random_cochain(rng, n, Direction::V_to_g, v, d, 40);
                Cochain lhs = l1_t(b, t, f);
                Cochain rhs = delta_T(s, t, f);
                if (n % 2 == 0) rhs.coeffs *= Scalar(-1);
                c.require(lhs.coeffs == rhs.coeffs, "l1^T != (-1)^(n-1) partial_T");
                ++fs;
            }
    }
    c.require(fs >= 40, "fewer than 40 cochains exercised");
    c.detail << "cochains=" << fs;
}

// criterion 6: obstruction theory
void obstruction_theory(Check& c) {
    auto run_fixture = [&](const TwistedSetup& s, const LinearOperator& t, int want_orders) {
        Matrix m1 = delta_T_matrix(s, t, 1);
        auto kb = kernel_basis(m1);
        const int d = s.rep.algebra.dim, v = s.rep.dimV;
        for (const auto& k : kb) {
            LinearOperator t1{v, d, Matrix(d, v)};
            for (int u = 0; u < v; ++u)
                for (int l = 0; l < d; ++l) t1.matrix.at(l, u) = k[static_cast<std::size_t>(u) * d + l];
            std::vector<LinearOperator> terms = {t, t1};
            c.require(check_order_n(s, terms).ok, "order-1 deformation from a 1-cocycle fails");
            for (int order = 1; order < want_orders; ++order) {
                ObstructionCochain ob = obstruction(s, terms);
                c.require(delta_T(s, t, ob.ob).coeffs.is_zero(), "obstruction is not closed");
                Vec rhs(ob.ob.coeffs.size());
                for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = -ob.ob.coeffs.flat(i);
                Matrix aug(m1.rows(), m1.cols() + 1);
                for (int r2 = 0; r2 < m1.rows(); ++r2) {
                    for (int c2 = 0; c2 < m1.cols(); ++c2) aug.at(r2, c2) = m1.at(r2, c2);
                    aug.at(r2, m1.cols()) = rhs[r2];
                }
                const bool consistent = rank(aug) == rank(m1);
                auto x = extend(s, terms);
                c.require(x.has_value() == consistent, "extendability disagrees with system consistency");
                if (!x) break;
                terms.push_back(*x);
                c.require(check_order_n(s, terms).ok, "extended deformation fails the order system");
            }
        }
        return kb.size();
    };
    auto s1 = fixtures::t_setup();
    std::size_t n1 = run_fixture(s1, fixtures::t_op(), 3);
    // trivial tail: (T, 0) extends by zero
    {
        std::vector<LinearOperator> terms = {fixtures::t_op(), zero_operator(2, 2)};
        ObstructionCochain ob = obstruction(s1, terms);
        c.require(ob.ob.coeffs.is_zero(), "zero first-order term has nonzero obstruction");
        auto x = extend(s1, terms);
        c.require(x.has_value() && x->matrix.is_zero(), "zero deformation does not extend by zero");
    }
    auto s2 = fixtures::small_setup();
    c.require(cohomology_dim_T(s2, fixtures::small_t(), 2) == 0, "vanishing-cohomology fixture has HH_T^2 != 0");
    std::size_t n2 = run_fixture(s2, fixtures::small_t(), 3);
    c.require(n2 >= 1, "vanishing-cohomology fixture has no 1-cocycles");
    auto s3 = fixtures::big_setup();
    std::size_t n3 = run_fixture(s3, fixtures::big_t(), 2);
    c.detail << "cocycles=" << n1 << "+" << n2 << "+" << n3;
}

// criterion 7: NS constructions
void ns_constructions(Check& c) {
    auto a = fixtures::a1();
    auto fix_t = fixtures::t_setup();
    auto big = fixtures::big_setup();
    auto big_t = fixtures::big_t();

    std::vector<NSAlgebra> algs;
    algs.push_back(ns_from_trbo(fix_t, fixtures::t_op()));
    algs.push_back(ns_from_trbo(big, big_t));
    algs.push_back(ns_from_nijenhuis(a, fixtures::n_op()));
    algs.push_back(ns_from_reynolds(a, fixtures::r_op()));
    for (long lam : {1L, 2L}) {
        LinearOperator b{2, 2, Scalar(-lam) * Matrix::identity(2)};
        c.require(check_weighted_rbo(a, b, Scalar(lam)).ok, "-lambda*Id fails the weighted identity");
        algs.push_back(ns_from_weighted_rbo(a, b, Scalar(lam)));
    }
    for (const auto& n : algs) {
        c.require(check_ns(n).ok, "check_ns (corrected) failed");
        c.require(check_3leibniz(subadjacent(n)).ok, "subadjacent fails the fundamental identity");
        NsCanonicalPackage pkg = ns_canonical_package(n);
        c.require(pkg.witness.ok, "identity map is not a twisted Rota-Baxter operator over the subadjacent algebra");
    }
    c.require(ns_star(algs[0]) == induced_bracket(fix_t, fixtures::t_op()).bracket,
              "star product differs from the induced bracket");
    c.require(ns_star(algs[1]) == induced_bracket(big, big_t).bracket,
              "star product differs from the induced bracket (invertible-cochain fixture)");
    NSAlgebra compat = compatible_ns_from_invertible_trbo(fix_t, fixtures::t_op());
    c.require(ns_star(compat) == fix_t.rep.algebra.bracket, "compatible NS does not reproduce the bracket");
    NSAlgebra compat_big = compatible_ns_from_invertible_trbo(big, big_t);
    c.require(ns_star(compat_big) == big.rep.algebra.bracket,
              "compatible NS does not reproduce the bracket (invertible-cochain fixture)");
    c.detail << "ns algebras=" << algs.size() + 2;
}

// criterion 8: the printed fifth axiom fails where the corrected one holds
void axiom_erratum(Check& c) {
    auto big = fixtures::big_setup();
    NSAlgebra n = ns_from_trbo(big, fixtures::big_t());
    Report corrected = check_ns(n, NsAxiomMode::Corrected);
    Report printed = check_ns(n, NsAxiomMode::Printed);
    c.require(corrected.ok, "corrected axioms fail on the operator-induced algebra");
    c.require(!printed.ok, "printed fifth axiom unexpectedly holds");
    bool only_75 = !printed.violations.empty();
    for (const auto& v : printed.violations)
        if (v.equation != "7.5-printed") only_75 = false;
    c.require(only_75, "printed-mode violations are not confined to the fifth axiom");
    c.detail << "printed violations=" << printed.violations_total;
}

} // namespace

std::vector<CriterionResult> run_acceptance() {
    struct Entry {
        int id;
        const char* name;
        std::function<void(Check&)> fn;
    };
    const std::vector<Entry> entries = {
        {1, "complex-property", complex_property},
        {2, "graph-criterion", graph_criterion},
        {3, "maurer-cartan-equivalence", maurer_cartan_equivalence},
        {4, "graded-engine", graded_engine},
        {5, "twisted-differential-consistency", twisted_differential_consistency},
        {6, "obstruction-theory", obstruction_theory},
        {7, "ns-constructions", ns_constructions},
        {8, "axiom-erratum", axiom_erratum},
    };
    std::vector<CriterionResult> out;
    double total = 0.0;
    for (const auto& e : entries) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            e.fn(c);
        } catch (const std::exception& ex) {
            c.require(false, std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        total += secs;
        out.push_back({e.id, e.name, c.ok, c.detail.str(), secs});
    }
    CriterionResult budget;
    budget.id = 9;
    budget.name = "runtime-budget";
    budget.seconds = total;
    budget.passed = total < 300.0;
    std::ostringstream d;
    d << "total=" << total << "s limit=300s";
    budget.detail = d.str();
    out.push_back(budget);
    return out;
}

std::string format_criterion(const CriterionResult& c) {
    std::ostringstream s;
    s << (c.passed ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  (" << c.seconds << "s)";
    if (!c.detail.empty()) s << "  " << c.detail;
    return s.str();
}

} // namespace l3kit
