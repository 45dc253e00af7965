#include "deformation.hpp"

#include <chrono>
#include <string>

namespace l3kit {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void require_terms(const TwistedSetup& s, const std::vector<LinearOperator>& terms) {
    if (terms.empty()) throw precondition_error("deformation needs at least the base operator");
    for (const auto& t : terms)
        if (t.src_dim != s.rep.dimV || t.dst_dim != s.rep.algebra.dim)
            throw dim_error("deformation terms must map V to g");
    if (!check_trbo(s, terms[0]).ok)
        throw precondition_error("deformation base term is not a twisted Rota-Baxter operator");
}

// One side pair of the order-p balance on a basis triple.
void order_p_sides(const TwistedSetup& s, const std::vector<LinearOperator>& terms, int p, int u, int v, int w,
                   Vec& lhs, Vec& rhs) {
    const Representation& r = s.rep;
    const int d = r.algebra.dim, n = static_cast<int>(terms.size()) - 1;
    const Vec fu = basis_vec(r.dimV, u), fv = basis_vec(r.dimV, v), fw = basis_vec(r.dimV, w);
    lhs = zero_vec(d);
    rhs = zero_vec(d);
    for (int i = 0; i <= std::min(p, n); ++i)
        for (int j = 0; i + j <= p && j <= n; ++j) {
            const int k = p - i - j;
            if (k > n) continue;
            vec_add(lhs, tri_eval(r.algebra.bracket, op_column(terms[i], u), op_column(terms[j], v),
                                  op_column(terms[k], w)));
            Vec inner = tri_eval(r.rho_l, op_column(terms[j], u), op_column(terms[k], v), fw);
            vec_add(inner, tri_eval(r.rho_m, op_column(terms[j], u), fv, op_column(terms[k], w)));
            vec_add(inner, tri_eval(r.rho_r, fu, op_column(terms[j], v), op_column(terms[k], w)));
            vec_add(rhs, op_apply(terms[i], inner));
        }
    for (int i = 0; i <= std::min(p, n); ++i)
        for (int j = 0; i + j <= p && j <= n; ++j)
            for (int k = 0; i + j + k <= p && k <= n; ++k) {
                const int l = p - i - j - k;
                if (l > n) continue;
                Vec ph = phi_eval(s, op_column(terms[j], u), op_column(terms[k], v), op_column(terms[l], w));
                vec_add(rhs, op_apply(terms[i], ph));
            }
}

} // namespace

Report check_order_n(const TwistedSetup& s, const std::vector<LinearOperator>& terms) {
    require_terms(s, terms);
    const int n = static_cast<int>(terms.size()) - 1;
    const int v = s.rep.dimV;
    Report rep;
    Stopwatch sw;
    for (int p = 0; p <= n; ++p) {
        const std::string tag = "order-" + std::to_string(p);
        for (int a = 0; a < v; ++a)
            for (int b = 0; b < v; ++b)
                for (int c = 0; c < v; ++c) {
                    Vec lhs, rhs;
                    order_p_sides(s, terms, p, a, b, c, lhs, rhs);
                    ++rep.checked;
                    if (lhs != rhs) rep.record(tag, {a, b, c}, lhs, rhs);
                }
    }
    rep.seconds = sw.elapsed();
    return rep;
}

OrderNDeformation make_deformation(const TwistedSetup& s, std::vector<LinearOperator> terms) {
    if (!check_order_n(s, terms).ok)
        throw precondition_error("make_deformation: order-n system fails");
    return OrderNDeformation{s, std::move(terms)};
}

Cochain infinitesimal(const TwistedSetup& s, const std::vector<LinearOperator>& terms) {
    if (terms.size() < 2) throw precondition_error("infinitesimal needs order >= 1");
    if (!check_order_n(s, terms).ok) throw precondition_error("infinitesimal: not a valid deformation");
    Cochain t1 = cochain_from_operator(terms[1], Direction::V_to_g);
    if (!delta_T(s, terms[0], t1).coeffs.is_zero())
        throw std::logic_error("infinitesimal: first-order term is not closed");
    return t1;
}

ObstructionCochain obstruction(const TwistedSetup& s, const std::vector<LinearOperator>& terms) {
    if (!check_order_n(s, terms).ok) throw precondition_error("obstruction: not a valid deformation");
    const int n = static_cast<int>(terms.size()) - 1;
    const int v = s.rep.dimV, d = s.rep.algebra.dim;
    Cochain ob = zero_cochain(2, Direction::V_to_g, v, d);
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
            for (int c = 0; c < v; ++c) {
                Vec lhs, rhs;
                order_p_sides(s, terms, n + 1, a, b, c, lhs, rhs);
                Vec val = lhs;
                vec_sub(val, rhs);
                for (int l = 0; l < d; ++l) ob.coeffs.at(std::vector<int>{a, b, c, l}) = val[l];
            }
    ObstructionCochain out{std::move(ob)};
    if (!delta_T(s, terms[0], out.ob).coeffs.is_zero())
        throw std::logic_error("obstruction: cochain is not closed");
    return out;
}

std::optional<LinearOperator> extend(const TwistedSetup& s, const std::vector<LinearOperator>& terms) {
    ObstructionCochain ob = obstruction(s, terms);
    const int v = s.rep.dimV, d = s.rep.algebra.dim;
    Matrix m = delta_T_matrix(s, terms[0], 1);
    Vec rhs(ob.ob.coeffs.size());
    for (std::size_t i = 0; i < ob.ob.coeffs.size(); ++i) rhs[i] = -ob.ob.coeffs.flat(i);
    auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    LinearOperator next{v, d, Matrix(d, v)};
    // cochain flat order: [u, l] with l fastest
    for (int u = 0; u < v; ++u)
        for (int l = 0; l < d; ++l) next.matrix.at(l, u) = (*x)[static_cast<std::size_t>(u) * d + l];
    std::vector<LinearOperator> extended = terms;
    extended.push_back(next);
    if (!check_order_n(s, extended).ok)
        throw std::logic_error("extend: extended deformation fails the order system");
    return next;
}

std::optional<DegreeZeroCochain> infinitesimals_cohomologous(const TwistedSetup& s, const LinearOperator& t,
                                                             const Cochain& t1, const Cochain& t2) {
    const int v = s.rep.dimV, d = s.rep.algebra.dim;
    validate_cochain(t1, v, d);
    validate_cochain(t2, v, d);
    if (t1.degree != 1 || t2.degree != 1 || t1.direction != Direction::V_to_g || t2.direction != Direction::V_to_g)
        throw precondition_error("infinitesimals must be degree-1 V -> g cochains");
    if (!delta_T(s, t, t1).coeffs.is_zero() || !delta_T(s, t, t2).coeffs.is_zero())
        throw precondition_error("infinitesimals_cohomologous: inputs must be closed");
    Matrix m = wp_matrix(s, t);
    Vec rhs(static_cast<std::size_t>(v) * d);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = t2.coeffs.flat(i) - t1.coeffs.flat(i);
    auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    DegreeZeroCochain a{Matrix(d, d)};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a.tensor.at(i, j) = (*x)[static_cast<std::size_t>(i) * d + j];
    return a;
}

} // namespace l3kit
