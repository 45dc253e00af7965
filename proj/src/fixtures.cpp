#include "fixtures.hpp"

#include "graded.hpp"

namespace l3kit::fixtures {

Scalar Rng::small_scalar(int zero_percent) {
    if (uniform(0, 99) < zero_percent) return Scalar(0);
    int num = 0;
    while (num == 0) num = uniform(-3, 3);
    return Scalar(num, uniform(1, 2));
}

ThreeLeibnizAlgebra a1() {
    ThreeLeibnizAlgebra a{2, DenseTensor({2, 2, 2, 2})};
    a.bracket.at(std::vector<int>{0, 0, 0, 1}) = Scalar(1);
    return a;
}

Representation a1_adjoint() { return adjoint_rep(a1()); }

TwistedSetup t_setup() {
    Representation adj = a1_adjoint();
    Cochain phi = zero_cochain(2, Direction::g_to_V, 2, 2);
    phi.coeffs = Scalar(-2) * adj.algebra.bracket;
    return make_setup(std::move(adj), std::move(phi));
}

LinearOperator t_op() { return identity_operator(2); }

LinearOperator n_op() {
    LinearOperator n = identity_operator(2);
    n.matrix.at(1, 0) = Scalar(1);
    return n;
}

LinearOperator r_op() {
    LinearOperator t = identity_operator(2);
    t.matrix.at(1, 1) = Scalar(1, 2);
    return t;
}

TwistedSetup big_setup() {
    // g: dim 3, generators e0,e1, center e2.
    ThreeLeibnizAlgebra g{3, DenseTensor({3, 3, 3, 3})};
    g.bracket.at(std::vector<int>{0, 0, 0, 2}) = Scalar(1);
    g.bracket.at(std::vector<int>{0, 1, 0, 2}) = Scalar(2);
    g.bracket.at(std::vector<int>{1, 0, 1, 2}) = Scalar(-1);
    g.bracket.at(std::vector<int>{1, 1, 0, 2}) = Scalar(1, 2);

    // Actions factor through the square-zero map M(f1) = f0 on V = Q^3.
    const int d = 3, v = 3;
    Matrix m(v, v);
    m.at(0, 1) = Scalar(1);
    Matrix lam_l(d, d), lam_m(d, d), lam_r(d, d);
    lam_l.at(0, 0) = Scalar(1);
    lam_l.at(0, 1) = Scalar(-2);
    lam_l.at(1, 1) = Scalar(3);
    lam_m.at(0, 0) = Scalar(1, 2);
    lam_m.at(1, 0) = Scalar(1);
    lam_r.at(0, 1) = Scalar(1);
    lam_r.at(1, 1) = Scalar(-1);

    Representation rep{g, v, DenseTensor({d, d, v, v}), DenseTensor({d, v, d, v}), DenseTensor({v, d, d, v})};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int a = 0; a < v; ++a)
                for (int b = 0; b < v; ++b) {
                    rep.rho_l.at(std::vector<int>{i, j, a, b}) = lam_l.at(i, j) * m.at(b, a);
                    rep.rho_m.at(std::vector<int>{i, a, j, b}) = lam_m.at(i, j) * m.at(b, a);
                    rep.rho_r.at(std::vector<int>{a, i, j, b}) = lam_r.at(i, j) * m.at(b, a);
                }

    // Invertible 1-cochain w; Phi = -delta(w) makes w^{-1} twisted
    // Rota-Baxter by construction.
    LinearOperator w{d, v, Matrix(v, d)};
    w.matrix.at(0, 0) = Scalar(1);
    w.matrix.at(0, 1) = Scalar(1);
    w.matrix.at(1, 1) = Scalar(1);
    w.matrix.at(1, 2) = Scalar(2);
    w.matrix.at(2, 0) = Scalar(1);
    w.matrix.at(2, 2) = Scalar(1);
    Cochain phi = coboundary(rep, cochain_from_operator(w, Direction::g_to_V));
    phi.coeffs *= Scalar(-1);
    return make_setup(std::move(rep), std::move(phi));
}

LinearOperator big_t() {
    TwistedSetup s = big_setup();
    // T = w^{-1}, recomputed from the same w as big_setup.
    Matrix w(3, 3);
    w.at(0, 0) = Scalar(1);
    w.at(0, 1) = Scalar(1);
    w.at(1, 1) = Scalar(1);
    w.at(1, 2) = Scalar(2);
    w.at(2, 0) = Scalar(1);
    w.at(2, 2) = Scalar(1);
    auto inv = inverse(w);
    if (!inv) throw std::logic_error("big_t: 1-cochain is singular");
    return LinearOperator{3, 3, *inv};
}

TwistedSetup small_setup() {
    ThreeLeibnizAlgebra g{1, DenseTensor({1, 1, 1, 1})};
    Representation rep{g, 1, DenseTensor({1, 1, 1, 1}), DenseTensor({1, 1, 1, 1}), DenseTensor({1, 1, 1, 1})};
    rep.rho_l.flat(0) = Scalar(1);
    rep.rho_m.flat(0) = Scalar(-2);
    rep.rho_r.flat(0) = Scalar(1);
    Cochain phi = zero_cochain(2, Direction::g_to_V, 1, 1);
    return make_setup(std::move(rep), std::move(phi));
}

LinearOperator small_t() { return identity_operator(1); }

ThreeLeibnizAlgebra random_nilpotent_algebra(Rng& rng, int dim, int generators) {
    if (generators >= dim) generators = dim - 1;
    if (generators < 1) generators = 1;
    ThreeLeibnizAlgebra a{dim, DenseTensor({dim, dim, dim, dim})};
    for (int i = 0; i < generators; ++i)
        for (int j = 0; j < generators; ++j)
            for (int k = 0; k < generators; ++k)
                for (int l = generators; l < dim; ++l)
                    a.bracket.at(std::vector<int>{i, j, k, l}) = rng.small_scalar(60);
    return a;
}

LeibnizAlgebra random_nilpotent_leibniz(Rng& rng, int dim, int generators) {
    if (generators >= dim) generators = dim - 1;
    if (generators < 1) generators = 1;
    LeibnizAlgebra a{dim, DenseTensor({dim, dim, dim})};
    for (int i = 0; i < generators; ++i)
        for (int j = 0; j < generators; ++j)
            for (int l = generators; l < dim; ++l)
                a.bracket.at(std::vector<int>{i, j, l}) = rng.small_scalar(50);
    return a;
}

LinearOperator random_operator(Rng& rng, int src, int dst, int zero_percent) {
    LinearOperator t{src, dst, Matrix(dst, src)};
    for (int i = 0; i < dst; ++i)
        for (int j = 0; j < src; ++j) t.matrix.at(i, j) = rng.small_scalar(zero_percent);
    return t;
}

Representation random_representation(Rng& rng, int max_dim_g, int max_dim_v) {
    const int kind = rng.uniform(0, 2);
    const int d = rng.uniform(2, max_dim_g);
    ThreeLeibnizAlgebra g = random_nilpotent_algebra(rng, d, rng.uniform(1, d - 1));
    if (kind == 0) {
        // zero actions on a random space
        const int v = rng.uniform(1, max_dim_v);
        return Representation{g, v, DenseTensor({d, d, v, v}), DenseTensor({d, v, d, v}), DenseTensor({v, d, d, v})};
    }
    if (kind == 1) return adjoint_rep(g);
    // actions through a square-zero endomorphism: every composite in the
    // representation identities vanishes and the bracket slots land in the
    // center, so the identities hold with nontrivial actions.
    const int v = std::max(2, rng.uniform(2, max_dim_v));
    Matrix m(v, v);
    m.at(0, v - 1) = rng.small_scalar(0);
    const int gen = d - 1;
    Representation rep{g, v, DenseTensor({d, d, v, v}), DenseTensor({d, v, d, v}), DenseTensor({v, d, d, v})};
    for (int i = 0; i < gen; ++i)
        for (int j = 0; j < gen; ++j) {
            const Scalar cl = rng.small_scalar(40), cm = rng.small_scalar(40), cr = rng.small_scalar(40);
            for (int a = 0; a < v; ++a)
                for (int b = 0; b < v; ++b) {
                    rep.rho_l.at(std::vector<int>{i, j, a, b}) = cl * m.at(b, a);
                    rep.rho_m.at(std::vector<int>{i, a, j, b}) = cm * m.at(b, a);
                    rep.rho_r.at(std::vector<int>{a, i, j, b}) = cr * m.at(b, a);
                }
        }
    return rep;
}

Cochain random_closed_two_cochain(Rng& rng, const Representation& r) {
    ModuleData md = module_of(r);
    Matrix d2 = coboundary_matrix(md, 2);
    auto basis = kernel_basis(d2);
    Cochain phi = zero_cochain(2, Direction::g_to_V, r.algebra.dim, r.dimV);
    for (const Vec& k : basis) {
        const Scalar c = rng.small_scalar(60);
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < k.size(); ++i) phi.coeffs.flat(i) += c * k[i];
    }
    return phi;
}

Cochain random_cochain(Rng& rng, int degree, Direction dir, int src, int dst, int zero_percent) {
    Cochain f = zero_cochain(degree, dir, src, dst);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) f.coeffs.flat(i) = rng.small_scalar(zero_percent);
    return f;
}

TwistedSetup random_setup(Rng& rng, int max_dim_g, int max_dim_v) {
    Representation rep = random_representation(rng, max_dim_g, max_dim_v);
    Cochain phi = random_closed_two_cochain(rng, rep);
    return make_setup(std::move(rep), std::move(phi));
}

} // namespace l3kit::fixtures
