#include "ns.hpp"

#include <chrono>

namespace l3kit {

namespace {
struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void require_ns_shapes(const NSAlgebra& a) {
    const std::vector<int> s = {a.dim, a.dim, a.dim, a.dim};
    if (a.lt.shape() != s || a.rt.shape() != s || a.md.shape() != s || a.dia.shape() != s)
        throw dim_error("NS algebra products must all have shape [d,d,d,d]");
}
} // namespace

DenseTensor ns_star(const NSAlgebra& a) {
    require_ns_shapes(a);
    DenseTensor st = a.lt;
    st += a.rt;
    st += a.md;
    st += a.dia;
    return st;
}

Report check_ns(const NSAlgebra& a, NsAxiomMode mode) {
    require_ns_shapes(a);
    const int d = a.dim;
    const DenseTensor st = ns_star(a);
    Report rep;
    Stopwatch sw;
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                    for (int z = 0; z < d; ++z) {
                        const Index tup = {p, q, x, y, z};
                        {
                            Vec lhs = tri_slot(a.rt, out_row3(a.rt, x, y, z), 2, p, q);
                            Vec rhs = tri_slot(a.rt, out_row3(st, p, q, x), 0, y, z);
                            vec_add(rhs, tri_slot(a.rt, out_row3(st, p, q, y), 1, x, z));
                            vec_add(rhs, tri_slot(a.rt, out_row3(a.rt, p, q, z), 2, x, y));
                            rep.tally(lhs, rhs, "7.1", tup);
                        }
                        {
                            Vec lhs = tri_slot(a.lt, out_row3(st, x, y, z), 2, p, q);
                            Vec rhs = tri_slot(a.lt, out_row3(a.lt, p, q, x), 0, y, z);
                            vec_add(rhs, tri_slot(a.md, out_row3(a.lt, p, q, y), 1, x, z));
                            vec_add(rhs, tri_slot(a.rt, out_row3(a.lt, p, q, z), 2, x, y));
                            rep.tally(lhs, rhs, "7.2", tup);
                        }
                        {
                            Vec lhs = tri_slot(a.md, out_row3(st, x, y, z), 2, p, q);
                            Vec rhs = tri_slot(a.lt, out_row3(a.md, p, q, x), 0, y, z);
                            vec_add(rhs, tri_slot(a.md, out_row3(a.md, p, q, y), 1, x, z));
                            vec_add(rhs, tri_slot(a.rt, out_row3(a.md, p, q, z), 2, x, y));
                            rep.tally(lhs, rhs, "7.3", tup);
                        }
                        Vec rhs74 = tri_slot(a.lt, out_row3(a.rt, p, q, x), 0, y, z);
                        vec_add(rhs74, tri_slot(a.lt, out_row3(st, p, q, y), 1, x, z));
                        vec_add(rhs74, tri_slot(a.lt, out_row3(st, p, q, z), 2, x, y));
                        rep.tally(tri_slot(a.rt, out_row3(a.lt, x, y, z), 2, p, q), rhs74, "7.4", tup);
                        if (mode == NsAxiomMode::Printed) {
                            rep.tally(tri_slot(a.rt, out_row3(a.dia, x, y, z), 2, p, q), rhs74, "7.5-printed", tup);
                        } else {
                            Vec lhs = tri_slot(a.rt, out_row3(a.md, x, y, z), 2, p, q);
                            Vec rhs = tri_slot(a.md, out_row3(st, p, q, x), 0, y, z);
                            vec_add(rhs, tri_slot(a.md, out_row3(a.rt, p, q, y), 1, x, z));
                            vec_add(rhs, tri_slot(a.md, out_row3(st, p, q, z), 2, x, y));
                            rep.tally(lhs, rhs, "7.5-corrected", tup);
                        }
                        {
                            Vec lhs = tri_slot(a.dia, out_row3(st, x, y, z), 2, p, q);
                            vec_add(lhs, tri_slot(a.rt, out_row3(a.dia, x, y, z), 2, p, q));
                            Vec rhs = tri_slot(a.rt, out_row3(a.dia, p, q, z), 2, x, y);
                            vec_add(rhs, tri_slot(a.dia, out_row3(st, p, q, z), 2, x, y));
                            vec_add(rhs, tri_slot(a.md, out_row3(a.dia, p, q, y), 1, x, z));
                            vec_add(rhs, tri_slot(a.dia, out_row3(st, p, q, y), 1, x, z));
                            vec_add(rhs, tri_slot(a.dia, out_row3(st, p, q, x), 0, y, z));
                            vec_add(rhs, tri_slot(a.lt, out_row3(a.dia, p, q, x), 0, y, z));
                            rep.tally(lhs, rhs, "7.6", tup);
                        }
                    }
    rep.seconds = sw.elapsed();
    return rep;
}

ThreeLeibnizAlgebra subadjacent(const NSAlgebra& a) {
    if (!check_ns(a).ok) throw precondition_error("subadjacent: NS axioms fail");
    return ThreeLeibnizAlgebra{a.dim, ns_star(a)};
}

NsCanonicalPackage ns_canonical_package(const NSAlgebra& a) {
    ThreeLeibnizAlgebra sub = subadjacent(a);
    Representation rep{sub, a.dim, a.rt, a.md, a.lt};
    if (!check_representation(rep).ok)
        throw std::logic_error("ns_canonical_package: actions fail the representation identities");
    Cochain phi = zero_cochain(2, Direction::g_to_V, a.dim, a.dim);
    phi.coeffs = a.dia;
    NsCanonicalPackage out{rep, make_two_cocycle(rep, std::move(phi)), Report{}};
    out.witness = check_trbo(TwistedSetup{out.rep, out.phi}, identity_operator(a.dim));
    return out;
}

namespace {

void assert_ns(const NSAlgebra& a, const char* who) {
    if (!check_ns(a).ok) throw std::logic_error(std::string(who) + ": constructed algebra fails the NS axioms");
}

} // namespace

NSAlgebra ns_from_trbo(const TwistedSetup& s, const LinearOperator& t) {
    if (!check_trbo(s, t).ok)
        throw precondition_error("ns_from_trbo: operator is not a twisted Rota-Baxter operator");
    const int v = s.rep.dimV;
    NSAlgebra out{v, DenseTensor({v, v, v, v}), DenseTensor({v, v, v, v}), DenseTensor({v, v, v, v}),
                  DenseTensor({v, v, v, v})};
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
            for (int c = 0; c < v; ++c) {
                const Vec ta = op_column(t, a), tb = op_column(t, b), tc = op_column(t, c);
                const Vec fa = basis_vec(v, a), fb = basis_vec(v, b), fc = basis_vec(v, c);
                Vec lt = tri_eval(s.rep.rho_r, fa, tb, tc);
                Vec md = tri_eval(s.rep.rho_m, ta, fb, tc);
                Vec rt = tri_eval(s.rep.rho_l, ta, tb, fc);
                Vec dia = phi_eval(s, ta, tb, tc);
                for (int l = 0; l < v; ++l) {
                    out.lt.at(std::vector<int>{a, b, c, l}) = lt[l];
                    out.md.at(std::vector<int>{a, b, c, l}) = md[l];
                    out.rt.at(std::vector<int>{a, b, c, l}) = rt[l];
                    out.dia.at(std::vector<int>{a, b, c, l}) = dia[l];
                }
            }
    assert_ns(out, "ns_from_trbo");
    return out;
}

NSAlgebra ns_from_nijenhuis(const ThreeLeibnizAlgebra& a, const LinearOperator& n) {
    if (!check_nijenhuis(a, n).ok) throw precondition_error("ns_from_nijenhuis: operator fails the Nijenhuis identity");
    const int d = a.dim;
    NSAlgebra out{d, DenseTensor({d, d, d, d}), DenseTensor({d, d, d, d}), DenseTensor({d, d, d, d}),
                  DenseTensor({d, d, d, d})};
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                const Vec ex = basis_vec(d, x), ey = basis_vec(d, y), ez = basis_vec(d, z);
                const Vec nx = n.matrix.apply(ex), ny = n.matrix.apply(ey), nz = n.matrix.apply(ez);
                Vec lt = tri_eval(a.bracket, ex, ny, nz);
                Vec md = tri_eval(a.bracket, nx, ey, nz);
                Vec rt = tri_eval(a.bracket, nx, ny, ez);
                Vec inner = tri_eval(a.bracket, ex, ey, nz);
                vec_add(inner, tri_eval(a.bracket, ex, ny, ez));
                vec_add(inner, tri_eval(a.bracket, nx, ey, ez));
                Vec dia = n.matrix.apply(n.matrix.apply(tri_eval(a.bracket, ex, ey, ez)));
                vec_sub(dia, n.matrix.apply(inner));
                for (int l = 0; l < d; ++l) {
                    out.lt.at(std::vector<int>{x, y, z, l}) = lt[l];
                    out.md.at(std::vector<int>{x, y, z, l}) = md[l];
                    out.rt.at(std::vector<int>{x, y, z, l}) = rt[l];
                    out.dia.at(std::vector<int>{x, y, z, l}) = dia[l];
                }
            }
    assert_ns(out, "ns_from_nijenhuis");
    return out;
}

NSAlgebra ns_from_reynolds(const ThreeLeibnizAlgebra& a, const LinearOperator& t) {
    if (!check_reynolds(a, t).ok) throw precondition_error("ns_from_reynolds: operator fails the Reynolds identity");
    const int d = a.dim;
    NSAlgebra out{d, DenseTensor({d, d, d, d}), DenseTensor({d, d, d, d}), DenseTensor({d, d, d, d}),
                  DenseTensor({d, d, d, d})};
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                const Vec ex = basis_vec(d, x), ey = basis_vec(d, y), ez = basis_vec(d, z);
                const Vec tx = op_column(t, x), ty = op_column(t, y), tz = op_column(t, z);
                Vec lt = tri_eval(a.bracket, ex, ty, tz);
                Vec md = tri_eval(a.bracket, tx, ey, tz);
                Vec rt = tri_eval(a.bracket, tx, ty, ez);
                Vec dia = tri_eval(a.bracket, tx, ty, tz);
                vec_scale(dia, Scalar(-1));
                for (int l = 0; l < d; ++l) {
                    out.lt.at(std::vector<int>{x, y, z, l}) = lt[l];
                    out.md.at(std::vector<int>{x, y, z, l}) = md[l];
                    out.rt.at(std::vector<int>{x, y, z, l}) = rt[l];
                    out.dia.at(std::vector<int>{x, y, z, l}) = dia[l];
                }
            }
    assert_ns(out, "ns_from_reynolds");
    return out;
}

Report check_weighted_rbo(const ThreeLeibnizAlgebra& a, const LinearOperator& b, const Scalar& lambda) {
    if (b.src_dim != a.dim || b.dst_dim != a.dim) throw dim_error("weighted operator must map g to g");
    const int d = a.dim;
    Report rep;
    Stopwatch sw;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                const Vec ex = basis_vec(d, x), ey = basis_vec(d, y), ez = basis_vec(d, z);
                const Vec bx = op_column(b, x), by = op_column(b, y), bz = op_column(b, z);
                Vec lhs = tri_eval(a.bracket, bx, by, bz);
                Vec inner = tri_eval(a.bracket, ex, by, bz);
                vec_add(inner, tri_eval(a.bracket, bx, ey, bz));
                vec_add(inner, tri_eval(a.bracket, bx, by, ez));
                Vec wt = tri_eval(a.bracket, ex, ey, bz);
                vec_add(wt, tri_eval(a.bracket, bx, ey, ez));
                vec_add(wt, tri_eval(a.bracket, ex, by, ez));
                vec_axpy(inner, lambda, wt);
                vec_axpy(inner, lambda * lambda, tri_eval(a.bracket, ex, ey, ez));
                rep.tally(lhs, b.matrix.apply(inner), "weighted", {x, y, z});
            }
    rep.seconds = sw.elapsed();
    return rep;
}

NSAlgebra ns_from_weighted_rbo(const ThreeLeibnizAlgebra& a, const LinearOperator& b, const Scalar& lambda) {
    if (!check_weighted_rbo(a, b, lambda).ok)
        throw precondition_error("ns_from_weighted_rbo: operator fails the weighted identity");
    const int d = a.dim;
    NSAlgebra out{d, DenseTensor({d, d, d, d}), DenseTensor({d, d, d, d}), DenseTensor({d, d, d, d}),
                  DenseTensor({d, d, d, d})};
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                const Vec ex = basis_vec(d, x), ey = basis_vec(d, y), ez = basis_vec(d, z);
                const Vec bx = op_column(b, x), by = op_column(b, y), bz = op_column(b, z);
                Vec lt = tri_eval(a.bracket, ex, by, bz);
                Vec md = tri_eval(a.bracket, bx, ey, bz);
                Vec rt = tri_eval(a.bracket, bx, by, ez);
                Vec dia = tri_eval(a.bracket, ex, ey, bz);
                vec_add(dia, tri_eval(a.bracket, bx, ey, ez));
                vec_add(dia, tri_eval(a.bracket, ex, by, ez));
                vec_scale(dia, lambda);
                vec_axpy(dia, lambda * lambda, tri_eval(a.bracket, ex, ey, ez));
                for (int l = 0; l < d; ++l) {
                    out.lt.at(std::vector<int>{x, y, z, l}) = lt[l];
                    out.md.at(std::vector<int>{x, y, z, l}) = md[l];
                    out.rt.at(std::vector<int>{x, y, z, l}) = rt[l];
                    out.dia.at(std::vector<int>{x, y, z, l}) = dia[l];
                }
            }
    assert_ns(out, "ns_from_weighted_rbo");
    return out;
}

NSAlgebra compatible_ns_from_invertible_trbo(const TwistedSetup& s, const LinearOperator& t) {
    if (!check_trbo(s, t).ok)
        throw precondition_error("compatible_ns_from_invertible_trbo: not a twisted Rota-Baxter operator");
    if (t.src_dim != t.dst_dim)
        throw precondition_error("compatible_ns_from_invertible_trbo: operator is not square");
    auto tinv = inverse(t.matrix);
    if (!tinv) throw precondition_error("compatible_ns_from_invertible_trbo: operator is singular");
    const int d = s.rep.algebra.dim;
    NSAlgebra out{d, DenseTensor({d, d, d, d}), DenseTensor({d, d, d, d}), DenseTensor({d, d, d, d}),
                  DenseTensor({d, d, d, d})};
    auto invcol = [&](int i) {
        Vec v(static_cast<std::size_t>(d));
        for (int r2 = 0; r2 < d; ++r2) v[r2] = tinv->at(r2, i);
        return v;
    };
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                const Vec ex = basis_vec(d, x), ey = basis_vec(d, y), ez = basis_vec(d, z);
                Vec lt = t.matrix.apply(tri_eval(s.rep.rho_r, invcol(x), ey, ez));
                Vec md = t.matrix.apply(tri_eval(s.rep.rho_m, ex, invcol(y), ez));
                Vec rt = t.matrix.apply(tri_eval(s.rep.rho_l, ex, ey, invcol(z)));
                Vec dia = t.matrix.apply(phi_eval(s, ex, ey, ez));
                for (int l = 0; l < d; ++l) {
                    out.lt.at(std::vector<int>{x, y, z, l}) = lt[l];
                    out.md.at(std::vector<int>{x, y, z, l}) = md[l];
                    out.rt.at(std::vector<int>{x, y, z, l}) = rt[l];
                    out.dia.at(std::vector<int>{x, y, z, l}) = dia[l];
                }
            }
    assert_ns(out, "compatible_ns_from_invertible_trbo");
    if (!(ns_star(out) == s.rep.algebra.bracket))
        throw std::logic_error("compatible_ns_from_invertible_trbo: star product does not reproduce the bracket");
    return out;
}

Report ns_3lie_diagnostic(const NSAlgebra& a) {
    require_ns_shapes(a);
    const int d = a.dim;
    Report rep;
    Stopwatch sw;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                auto rt_xyz = out_row3(a.rt, x, y, z);
                Vec neg(out_row3(a.rt, y, x, z).begin(), out_row3(a.rt, y, x, z).end());
                vec_scale(neg, Scalar(-1));
                rep.tally(Vec(rt_xyz.begin(), rt_xyz.end()), neg, "3lie-antisym", {x, y, z});
                rep.tally(Vec(out_row3(a.md, x, y, z).begin(), out_row3(a.md, x, y, z).end()),
                          Vec(out_row3(a.rt, z, x, y).begin(), out_row3(a.rt, z, x, y).end()), "3lie-md", {x, y, z});
                rep.tally(Vec(out_row3(a.lt, x, y, z).begin(), out_row3(a.lt, x, y, z).end()),
                          Vec(out_row3(a.rt, y, z, x).begin(), out_row3(a.rt, y, z, x).end()), "3lie-lt", {x, y, z});
            }
    rep.seconds = sw.elapsed();
    return rep;
}

} // namespace l3kit
