#include "trbo.hpp"

#include <chrono>

namespace l3kit {

namespace {
struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};
} // namespace

LinearOperator identity_operator(int n) { return {n, n, Matrix::identity(n)}; }
LinearOperator zero_operator(int src, int dst) { return {src, dst, Matrix(dst, src)}; }

Vec op_column(const LinearOperator& t, int j) {
    Vec v(static_cast<std::size_t>(t.dst_dim));
    for (int i = 0; i < t.dst_dim; ++i) v[i] = t.matrix.at(i, j);
    return v;
}

Cochain cochain_from_operator(const LinearOperator& w, Direction dir) {
    Cochain f = zero_cochain(1, dir, w.src_dim, w.dst_dim);
    for (int i = 0; i < w.src_dim; ++i)
        for (int b = 0; b < w.dst_dim; ++b) f.coeffs.at(std::vector<int>{i, b}) = w.matrix.at(b, i);
    return f;
}

LinearOperator operator_from_cochain(const Cochain& f, int src, int dst) {
    if (f.degree != 1) throw dim_error("only degree-1 cochains are linear maps");
    validate_cochain(f, src, dst);
    LinearOperator w{src, dst, Matrix(dst, src)};
    for (int i = 0; i < src; ++i)
        for (int b = 0; b < dst; ++b) w.matrix.at(b, i) = f.coeffs.at(std::vector<int>{i, b});
    return w;
}

TwistedSetup make_setup(Representation rep, Cochain phi) {
    TwoCocycle c = make_two_cocycle(rep, std::move(phi));
    return TwistedSetup{std::move(rep), std::move(c)};
}

Vec phi_eval(const TwistedSetup& s, const Vec& x, const Vec& y, const Vec& z) {
    return tri_eval(s.phi.phi.coeffs, x, y, z);
}

namespace {

void require_t_shape(const TwistedSetup& s, const LinearOperator& t) {
    if (t.src_dim != s.rep.dimV || t.dst_dim != s.rep.algebra.dim)
        throw dim_error("operator must map V to g");
}

// rhs of the twisted Rota-Baxter identity before applying T.
Vec trbo_inner(const TwistedSetup& s, const LinearOperator& t, int u, int v, int w) {
    const Representation& r = s.rep;
    const Vec tu = op_column(t, u), tv = op_column(t, v), tw = op_column(t, w);
    Vec inner = tri_eval(r.rho_l, tu, tv, basis_vec(r.dimV, w));
    vec_add(inner, tri_eval(r.rho_m, tu, basis_vec(r.dimV, v), tw));
    vec_add(inner, tri_eval(r.rho_r, basis_vec(r.dimV, u), tv, tw));
    vec_add(inner, phi_eval(s, tu, tv, tw));
    return inner;
}

} // namespace

Report check_trbo(const TwistedSetup& s, const LinearOperator& t) {
    require_t_shape(s, t);
    const int v = s.rep.dimV;
    Report rep;
    Stopwatch sw;
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
            for (int c = 0; c < v; ++c) {
                Vec lhs = tri_eval(s.rep.algebra.bracket, op_column(t, a), op_column(t, b), op_column(t, c));
                Vec rhs = op_apply(t, trbo_inner(s, t, a, b, c));
                rep.tally(lhs, rhs, "3.1", {a, b, c});
            }
    rep.seconds = sw.elapsed();
    return rep;
}

Cochain trbo_defect(const TwistedSetup& s, const LinearOperator& t) {
    require_t_shape(s, t);
    const int v = s.rep.dimV, d = s.rep.algebra.dim;
    Cochain out = zero_cochain(2, Direction::V_to_g, v, d);
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
            for (int c = 0; c < v; ++c) {
                Vec val = tri_eval(s.rep.algebra.bracket, op_column(t, a), op_column(t, b), op_column(t, c));
                vec_sub(val, op_apply(t, trbo_inner(s, t, a, b, c)));
                for (int l = 0; l < d; ++l) out.coeffs.at(std::vector<int>{a, b, c, l}) = val[l];
            }
    return out;
}

ThreeLeibnizAlgebra induced_bracket_raw(const TwistedSetup& s, const LinearOperator& t) {
    require_t_shape(s, t);
    const int v = s.rep.dimV;
    ThreeLeibnizAlgebra out{v, DenseTensor({v, v, v, v})};
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
            for (int c = 0; c < v; ++c) {
                Vec val = trbo_inner(s, t, a, b, c);
                for (int l = 0; l < v; ++l) out.bracket.at(std::vector<int>{a, b, c, l}) = val[l];
            }
    return out;
}

ThreeLeibnizAlgebra induced_bracket(const TwistedSetup& s, const LinearOperator& t) {
    if (!check_trbo(s, t).ok)
        throw precondition_error("induced_bracket: operator is not a twisted Rota-Baxter operator");
    return induced_bracket_raw(s, t);
}

bool check_graph_subalgebra(const TwistedSetup& s, const LinearOperator& t) {
    require_t_shape(s, t);
    const int d = s.rep.algebra.dim, v = s.rep.dimV;
    const ThreeLeibnizAlgebra big = twisted_semidirect(s.rep, s.phi);
    auto graph_vec = [&](int a) {
        Vec w(static_cast<std::size_t>(d + v));
        for (int i = 0; i < d; ++i) w[i] = t.matrix.at(i, a);
        w[d + a] = Scalar(1);
        return w;
    };
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
            for (int c = 0; c < v; ++c) {
                Vec out = tri_eval(big.bracket, graph_vec(a), graph_vec(b), graph_vec(c));
                Vec vpart(out.begin() + d, out.end());
                Vec gpart(out.begin(), out.begin() + d);
                if (op_apply(t, vpart) != gpart) return false;
            }
    return true;
}

Report check_bracket_morphism(const ThreeLeibnizAlgebra& a, const ThreeLeibnizAlgebra& b, const Matrix& phi_map) {
    if (phi_map.cols() != a.dim || phi_map.rows() != b.dim)
        throw dim_error("bracket morphism map shape mismatch");
    Report rep;
    Stopwatch sw;
    auto img = [&](int i) {
        Vec v(static_cast<std::size_t>(b.dim));
        for (int r = 0; r < b.dim; ++r) v[r] = phi_map.at(r, i);
        return v;
    };
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y)
            for (int z = 0; z < a.dim; ++z) {
                Vec lhs = phi_map.apply(Vec(out_row3(a.bracket, x, y, z).begin(), out_row3(a.bracket, x, y, z).end()));
                Vec rhs = tri_eval(b.bracket, img(x), img(y), img(z));
                rep.tally(lhs, rhs, "morphism", {x, y, z});
            }
    rep.seconds = sw.elapsed();
    return rep;
}

Report check_morphism(const TwistedSetup& s, const TwistedSetup& s2, const LinearOperator& t,
                      const LinearOperator& t2, const LinearOperator& f, const LinearOperator& g) {
    require_t_shape(s, t);
    require_t_shape(s2, t2);
    const int d = s.rep.algebra.dim, v = s.rep.dimV;
    const int d2 = s2.rep.algebra.dim, v2 = s2.rep.dimV;
    if (f.src_dim != d || f.dst_dim != d2 || g.src_dim != v || g.dst_dim != v2)
        throw dim_error("morphism pair (f,g) shape mismatch");
    if (!check_trbo(s, t).ok || !check_trbo(s2, t2).ok)
        throw precondition_error("check_morphism: endpoints must be twisted Rota-Baxter operators");

    Report rep;
    Stopwatch sw;
    auto fi = [&](int i) { return op_column(f, i); };
    auto gi = [&](int a) { return op_column(g, a); };
    const auto& r1 = s.rep;
    const auto& r2 = s2.rep;

    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                Vec lhs = f.matrix.apply(Vec(out_row3(r1.algebra.bracket, x, y, z).begin(),
                                             out_row3(r1.algebra.bracket, x, y, z).end()));
                Vec rhs = tri_eval(r2.algebra.bracket, fi(x), fi(y), fi(z));
                rep.tally(lhs, rhs, "3.3-algebra", {x, y, z});
                Vec lhs_phi = g.matrix.apply(Vec(out_row3(s.phi.phi.coeffs, x, y, z).begin(),
                                                 out_row3(s.phi.phi.coeffs, x, y, z).end()));
                Vec rhs_phi = tri_eval(s2.phi.phi.coeffs, fi(x), fi(y), fi(z));
                rep.tally(lhs_phi, rhs_phi, "3.3-phi", {x, y, z});
            }
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int u = 0; u < v; ++u) {
                const int lidx[3] = {x, y, u};
                Vec lhs = g.matrix.apply(Vec(out_row(r1.rho_l, lidx).begin(), out_row(r1.rho_l, lidx).end()));
                Vec rhs = tri_eval(r2.rho_l, fi(x), fi(y), gi(u));
                rep.tally(lhs, rhs, "3.3-rho-l", {x, y, u});

                const int midx[3] = {x, u, y};
                Vec lhs_m = g.matrix.apply(Vec(out_row(r1.rho_m, midx).begin(), out_row(r1.rho_m, midx).end()));
                Vec rhs_m = tri_eval(r2.rho_m, fi(x), gi(u), fi(y));
                rep.tally(lhs_m, rhs_m, "3.3-rho-m", {x, u, y});

                const int ridx[3] = {u, x, y};
                Vec lhs_r = g.matrix.apply(Vec(out_row(r1.rho_r, ridx).begin(), out_row(r1.rho_r, ridx).end()));
                Vec rhs_r = tri_eval(r2.rho_r, gi(u), fi(x), fi(y));
                rep.tally(lhs_r, rhs_r, "3.3-rho-r", {u, x, y});
            }
    for (int u = 0; u < v; ++u) {
        Vec lhs = f.matrix.apply(op_column(t, u));
        Vec rhs = t2.matrix.apply(op_column(g, u));
        rep.tally(lhs, rhs, "3.3-T", {u});
    }
    rep.seconds = sw.elapsed();
    return rep;
}

namespace {

Vec nvec(const LinearOperator& n, int i) { return op_column(n, i); }

// The bracketed expression of the Nijenhuis identity and of the deformed
// bracket, on basis triples.
Vec nijenhuis_inner(const ThreeLeibnizAlgebra& a, const LinearOperator& n, int x, int y, int z) {
    const Vec ex = basis_vec(a.dim, x), ey = basis_vec(a.dim, y), ez = basis_vec(a.dim, z);
    const Vec nx = nvec(n, x), ny = nvec(n, y), nz = nvec(n, z);
    Vec first = tri_eval(a.bracket, ex, ny, nz);
    vec_add(first, tri_eval(a.bracket, nx, ey, nz));
    vec_add(first, tri_eval(a.bracket, nx, ny, ez));
    Vec second = tri_eval(a.bracket, ex, ey, nz);
    vec_add(second, tri_eval(a.bracket, ex, ny, ez));
    vec_add(second, tri_eval(a.bracket, nx, ey, ez));
    Vec res = first;
    vec_sub(res, n.matrix.apply(second));
    vec_add(res, n.matrix.apply(n.matrix.apply(tri_eval(a.bracket, ex, ey, ez))));
    return res;
}

} // namespace

Report check_nijenhuis(const ThreeLeibnizAlgebra& a, const LinearOperator& n) {
    if (n.src_dim != a.dim || n.dst_dim != a.dim) throw dim_error("Nijenhuis operator must map g to g");
    Report rep;
    Stopwatch sw;
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y)
            for (int z = 0; z < a.dim; ++z) {
                Vec lhs = tri_eval(a.bracket, nvec(n, x), nvec(n, y), nvec(n, z));
                Vec rhs = n.matrix.apply(nijenhuis_inner(a, n, x, y, z));
                rep.tally(lhs, rhs, "3.5", {x, y, z});
            }
    rep.seconds = sw.elapsed();
    return rep;
}

NijenhuisPackage nijenhuis_package(const ThreeLeibnizAlgebra& a, const LinearOperator& n) {
    if (!check_nijenhuis(a, n).ok) throw precondition_error("nijenhuis_package: operator fails the Nijenhuis identity");
    const int d = a.dim;
    NijenhuisPackage p;
    p.deformed = ThreeLeibnizAlgebra{d, DenseTensor({d, d, d, d})};
    DenseTensor rho_l({d, d, d, d}), rho_m({d, d, d, d}), rho_r({d, d, d, d});
    Cochain phi = zero_cochain(2, Direction::g_to_V, d, d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                const Vec ex = basis_vec(d, x), ey = basis_vec(d, y), ez = basis_vec(d, z);
                const Vec nx = nvec(n, x), ny = nvec(n, y), nz = nvec(n, z);
                Vec deformed = nijenhuis_inner(a, n, x, y, z);
                Vec rl = tri_eval(a.bracket, nx, ny, ez);
                Vec second = tri_eval(a.bracket, ex, ey, nz);
                vec_add(second, tri_eval(a.bracket, ex, ny, ez));
                vec_add(second, tri_eval(a.bracket, nx, ey, ez));
                Vec ph = n.matrix.apply(n.matrix.apply(tri_eval(a.bracket, ex, ey, ez)));
                vec_sub(ph, n.matrix.apply(second));
                for (int l = 0; l < d; ++l) {
                    p.deformed.bracket.at(std::vector<int>{x, y, z, l}) = deformed[l];
                    rho_l.at(std::vector<int>{x, y, z, l}) = rl[l];
                    phi.coeffs.at(std::vector<int>{x, y, z, l}) = ph[l];
                }
            }
    for (int i = 0; i < d; ++i)
        for (int aV = 0; aV < d; ++aV)
            for (int j = 0; j < d; ++j) {
                Vec rm = tri_eval(a.bracket, nvec(n, i), basis_vec(d, aV), nvec(n, j));
                for (int l = 0; l < d; ++l) rho_m.at(std::vector<int>{i, aV, j, l}) = rm[l];
            }
    for (int aV = 0; aV < d; ++aV)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Vec rr = tri_eval(a.bracket, basis_vec(d, aV), nvec(n, i), nvec(n, j));
                for (int l = 0; l < d; ++l) rho_r.at(std::vector<int>{aV, i, j, l}) = rr[l];
            }
    p.rep = Representation{p.deformed, d, std::move(rho_l), std::move(rho_m), std::move(rho_r)};
    if (!check_representation(p.rep).ok)
        throw std::logic_error("nijenhuis_package: induced actions fail the representation identities");
    p.phi = make_two_cocycle(p.rep, std::move(phi));
    p.witness = check_trbo(TwistedSetup{p.rep, p.phi}, identity_operator(d));
    return p;
}

TwistedSetup nijenhuis_setup(const NijenhuisPackage& p) { return TwistedSetup{p.rep, p.phi}; }

Report check_reynolds(const ThreeLeibnizAlgebra& a, const LinearOperator& t) {
    if (t.src_dim != a.dim || t.dst_dim != a.dim) throw dim_error("Reynolds operator must map g to g");
    Report rep;
    Stopwatch sw;
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y)
            for (int z = 0; z < a.dim; ++z) {
                const Vec tx = op_column(t, x), ty = op_column(t, y), tz = op_column(t, z);
                Vec lhs = tri_eval(a.bracket, tx, ty, tz);
                Vec inner = tri_eval(a.bracket, tx, ty, basis_vec(a.dim, z));
                vec_add(inner, tri_eval(a.bracket, tx, basis_vec(a.dim, y), tz));
                vec_add(inner, tri_eval(a.bracket, basis_vec(a.dim, x), ty, tz));
                vec_sub(inner, lhs);
                rep.tally(lhs, t.matrix.apply(inner), "reynolds", {x, y, z});
            }
    rep.seconds = sw.elapsed();
    return rep;
}

TwistedSetup reynolds_setup(const ThreeLeibnizAlgebra& a) {
    Representation adj = adjoint_rep(a);
    Cochain phi = zero_cochain(2, Direction::g_to_V, a.dim, a.dim);
    phi.coeffs = Scalar(-1) * a.bracket;
    return make_setup(std::move(adj), std::move(phi));
}

Report shift_iso(const Representation& r, const TwoCocycle& phi, const LinearOperator& w) {
    const int d = r.algebra.dim, v = r.dimV;
    if (w.src_dim != d || w.dst_dim != v) throw dim_error("shift 1-cochain must map g to V");
    Cochain shifted = phi.phi;
    shifted.coeffs += coboundary(r, cochain_from_operator(w, Direction::g_to_V)).coeffs;
    const ThreeLeibnizAlgebra from = twisted_semidirect(r, phi);
    const ThreeLeibnizAlgebra to = twisted_semidirect(r, make_two_cocycle(r, shifted));
    Matrix map = Matrix::identity(d + v);
    for (int i = 0; i < d; ++i)
        for (int b = 0; b < v; ++b) map.at(d + b, i) = -w.matrix.at(b, i);
    return check_bracket_morphism(from, to, map);
}

std::optional<LinearOperator> shift_trbo(const TwistedSetup& s, const LinearOperator& t, const LinearOperator& w) {
    require_t_shape(s, t);
    const int d = s.rep.algebra.dim, v = s.rep.dimV;
    if (w.src_dim != d || w.dst_dim != v) throw dim_error("shift 1-cochain must map g to V");
    if (!check_trbo(s, t).ok) throw precondition_error("shift_trbo: base operator is not a twisted Rota-Baxter operator");
    Matrix m = Matrix::identity(v) - w.matrix.mul(t.matrix);
    auto inv = inverse(m);
    if (!inv) return std::nullopt;
    LinearOperator out{v, d, t.matrix.mul(*inv)};
    Cochain shifted = s.phi.phi;
    shifted.coeffs += coboundary(s.rep, cochain_from_operator(w, Direction::g_to_V)).coeffs;
    TwistedSetup shifted_setup{s.rep, make_two_cocycle(s.rep, std::move(shifted))};
    if (!check_trbo(shifted_setup, out).ok)
        throw std::logic_error("shift_trbo: shifted operator fails the twisted identity");
    return out;
}

std::optional<LinearOperator> gauge_transform(const TwistedSetup& s, const LinearOperator& t, const LinearOperator& w) {
    require_t_shape(s, t);
    const int d = s.rep.algebra.dim, v = s.rep.dimV;
    if (w.src_dim != d || w.dst_dim != v) throw dim_error("gauge 1-cochain must map g to V");
    if (!check_trbo(s, t).ok)
        throw precondition_error("gauge_transform: base operator is not a twisted Rota-Baxter operator");
    if (!is_cocycle(s.rep, cochain_from_operator(w, Direction::g_to_V)))
        throw precondition_error("gauge_transform: the 1-cochain is not closed");
    Matrix m = Matrix::identity(v) + w.matrix.mul(t.matrix);
    auto inv = inverse(m);
    if (!inv) return std::nullopt; // not T-admissible
    LinearOperator out{v, d, t.matrix.mul(*inv)};
    if (!check_trbo(s, out).ok)
        throw std::logic_error("gauge_transform: transformed operator fails the twisted identity");
    if (!check_bracket_morphism(induced_bracket(s, t), induced_bracket(s, out), m).ok)
        throw std::logic_error("gauge_transform: Id + w T is not a bracket isomorphism");
    return out;
}

} // namespace l3kit
