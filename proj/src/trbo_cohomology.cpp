#include "trbo_cohomology.hpp"

namespace l3kit {

InducedRep induced_rep(const TwistedSetup& s, const LinearOperator& t) {
    if (!check_trbo(s, t).ok)
        throw precondition_error("induced_rep: operator is not a twisted Rota-Baxter operator");
    const Representation& r = s.rep;
    const int d = r.algebra.dim, v = r.dimV;
    InducedRep ir;
    ir.on_v = induced_bracket_raw(s, t);
    ir.rho_l = DenseTensor({v, v, d, d});
    ir.rho_m = DenseTensor({v, d, v, d});
    ir.rho_r = DenseTensor({d, v, v, d});
    const DenseTensor& br = r.algebra.bracket;
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
            for (int x = 0; x < d; ++x) {
                const Vec ta = op_column(t, a), tb = op_column(t, b);
                const Vec ex = basis_vec(d, x), fa = basis_vec(v, a), fb = basis_vec(v, b);
                {
                    Vec val = tri_eval(br, ta, tb, ex);
                    Vec inner = tri_eval(r.rho_m, ta, fb, ex);
                    vec_add(inner, tri_eval(r.rho_r, fa, tb, ex));
                    vec_add(inner, phi_eval(s, ta, tb, ex));
                    vec_sub(val, op_apply(t, inner));
                    for (int l = 0; l < d; ++l) ir.rho_l.at(std::vector<int>{a, b, x, l}) = val[l];
                }
                {
                    Vec val = tri_eval(br, ta, ex, tb);
                    Vec inner = tri_eval(r.rho_l, ta, ex, fb);
                    vec_add(inner, tri_eval(r.rho_r, fa, ex, tb));
                    vec_add(inner, phi_eval(s, ta, ex, tb));
                    vec_sub(val, op_apply(t, inner));
                    for (int l = 0; l < d; ++l) ir.rho_m.at(std::vector<int>{a, x, b, l}) = val[l];
                }
                {
                    Vec val = tri_eval(br, ex, ta, tb);
                    Vec inner = tri_eval(r.rho_l, ex, ta, fb);
                    vec_add(inner, tri_eval(r.rho_m, ex, fa, tb));
                    vec_add(inner, phi_eval(s, ex, ta, tb));
                    vec_sub(val, op_apply(t, inner));
                    for (int l = 0; l < d; ++l) ir.rho_r.at(std::vector<int>{x, a, b, l}) = val[l];
                }
            }
    return ir;
}

Representation induced_rep_as_representation(const InducedRep& ir) {
    const int d = static_cast<int>(ir.rho_l.shape()[2]);
    return Representation{ir.on_v, d, ir.rho_l, ir.rho_m, ir.rho_r};
}

ModuleData induced_module(const InducedRep& ir) {
    const int v = ir.on_v.dim, d = static_cast<int>(ir.rho_l.shape()[2]);
    return ModuleData{v, d, ir.on_v.bracket, ir.rho_l, ir.rho_m, ir.rho_r};
}

Cochain delta_T(const TwistedSetup& s, const LinearOperator& t, const Cochain& f) {
    if (f.direction != Direction::V_to_g) throw precondition_error("delta_T acts on V -> g cochains");
    validate_cochain(f, s.rep.dimV, s.rep.algebra.dim);
    InducedRep ir = induced_rep(s, t);
    return Cochain{f.degree + 1, Direction::V_to_g, coboundary_tensor(induced_module(ir), f.coeffs, f.degree)};
}

Cochain wp(const TwistedSetup& s, const LinearOperator& t, const DegreeZeroCochain& a) {
    const int d = s.rep.algebra.dim, v = s.rep.dimV;
    if (a.tensor.rows() != d || a.tensor.cols() != d) throw dim_error("degree-0 cochain must be d x d");
    if (!check_trbo(s, t).ok) throw precondition_error("wp: operator is not a twisted Rota-Baxter operator");
    Cochain out = zero_cochain(1, Direction::V_to_g, v, d);
    for (int u = 0; u < v; ++u) {
        Vec val(static_cast<std::size_t>(d));
        const Vec fu = basis_vec(v, u);
        const Vec tu = op_column(t, u);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const Scalar& c = a.tensor.at(i, j);
                if (c.is_zero()) continue;
                const Vec ei = basis_vec(d, i), ej = basis_vec(d, j);
                Vec term = op_apply(t, tri_eval(s.rep.rho_l, ei, ej, fu));
                vec_add(term, op_apply(t, phi_eval(s, ei, ej, tu)));
                vec_sub(term, tri_eval(s.rep.algebra.bracket, ei, ej, tu));
                vec_axpy(val, c, term);
            }
        for (int l = 0; l < d; ++l) out.coeffs.at(std::vector<int>{u, l}) = val[l];
    }
    return out;
}

Cochain partial_T(const TwistedSetup& s, const LinearOperator& t, const DegreeZeroCochain& a) {
    return wp(s, t, a);
}

Cochain partial_T(const TwistedSetup& s, const LinearOperator& t, const Cochain& f) {
    return delta_T(s, t, f);
}

Matrix wp_matrix(const TwistedSetup& s, const LinearOperator& t) {
    const int d = s.rep.algebra.dim, v = s.rep.dimV;
    Matrix m(v * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            DegreeZeroCochain a{Matrix(d, d)};
            a.tensor.at(i, j) = Scalar(1);
            Cochain img = wp(s, t, a);
            for (int u = 0; u < v; ++u)
                for (int l = 0; l < d; ++l) {
                    const Scalar& c = img.coeffs.at(std::vector<int>{u, l});
                    if (!c.is_zero()) m.at(u * d + l, i * d + j) = c;
                }
        }
    return m;
}

Matrix delta_T_matrix(const TwistedSetup& s, const LinearOperator& t, int n) {
    InducedRep ir = induced_rep(s, t);
    return coboundary_matrix(induced_module(ir), n);
}

int cohomology_dim_T(const TwistedSetup& s, const LinearOperator& t, int n) {
    if (n < 1) throw precondition_error("cohomology_dim_T: degree must be >= 1");
    Matrix dn = delta_T_matrix(s, t, n);
    const int z = dn.cols() - rank(dn);
    const int b = (n == 1) ? rank(wp_matrix(s, t)) : rank(delta_T_matrix(s, t, n - 1));
    return z - b;
}

} // namespace l3kit
