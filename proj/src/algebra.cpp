#include "algebra.hpp"

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

std::span<const Scalar> out_row(const DenseTensor& t, std::span<const int> lead) {
    const auto& shape = t.shape();
    if (lead.size() + 1 != shape.size()) throw dim_error("out_row rank mismatch");
    Index idx(lead.begin(), lead.end());
    idx.push_back(0);
    const std::size_t base = t.flat_index(idx);
    return {&t.flat(base), static_cast<std::size_t>(shape.back())};
}

Vec tri_eval(const DenseTensor& t, const Vec& x, const Vec& y, const Vec& z) {
    const auto& s = t.shape();
    if (s.size() != 4) throw dim_error("tri_eval expects a 4-axis tensor");
    if (x.size() != std::size_t(s[0]) || y.size() != std::size_t(s[1]) || z.size() != std::size_t(s[2]))
        throw dim_error("tri_eval argument size mismatch");
    Vec out(static_cast<std::size_t>(s[3]));
    for (int i = 0; i < s[0]; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < s[1]; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar xy = x[i] * y[j];
            for (int k = 0; k < s[2]; ++k) {
                if (z[k].is_zero()) continue;
                const Scalar c = xy * z[k];
                auto row = out_row3(t, i, j, k);
                for (int l = 0; l < s[3]; ++l)
                    if (!row[l].is_zero()) out[l] += c * row[l];
            }
        }
    }
    return out;
}

Vec bi_eval(const DenseTensor& t, const Vec& x, const Vec& y) {
    const auto& s = t.shape();
    if (s.size() != 3) throw dim_error("bi_eval expects a 3-axis tensor");
    if (x.size() != std::size_t(s[0]) || y.size() != std::size_t(s[1]))
        throw dim_error("bi_eval argument size mismatch");
    Vec out(static_cast<std::size_t>(s[2]));
    for (int i = 0; i < s[0]; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < s[1]; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar c = x[i] * y[j];
            const int idx[2] = {i, j};
            auto row = out_row(t, idx);
            for (int k = 0; k < s[2]; ++k)
                if (!row[k].is_zero()) out[k] += c * row[k];
        }
    }
    return out;
}

Vec basis_vec(int dim, int i) {
    Vec v(static_cast<std::size_t>(dim));
    v[i] = Scalar(1);
    return v;
}

Vec tri_slot(const DenseTensor& t, std::span<const Scalar> row, int slot, int a, int b) {
    const auto& s = t.shape();
    if (s.size() != 4) throw dim_error("tri_slot expects a 4-axis tensor");
    Vec out(static_cast<std::size_t>(s[3]));
    for (int l = 0; l < static_cast<int>(row.size()); ++l) {
        if (row[l].is_zero()) continue;
        const int i = slot == 0 ? l : a;
        const int j = slot == 1 ? l : (slot == 0 ? a : b);
        const int k = slot == 2 ? l : b;
        auto r = out_row3(t, i, j, k);
        for (int m = 0; m < s[3]; ++m)
            if (!r[m].is_zero()) out[m] += row[l] * r[m];
    }
    return out;
}

Report check_3leibniz(const DenseTensor& bracket) {
    const auto& s = bracket.shape();
    if (s.size() != 4 || s[0] != s[1] || s[0] != s[2] || s[0] != s[3])
        throw dim_error("3-Leibniz bracket must have shape [d,d,d,d]");
    const int d = s[0];
    Report rep;
    Stopwatch sw;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                    for (int z = 0; z < d; ++z) {
                        Vec lhs = tri_slot(bracket, out_row3(bracket, x, y, z), 2, a, b);
                        Vec rhs = tri_slot(bracket, out_row3(bracket, a, b, x), 0, y, z);
                        vec_add(rhs, tri_slot(bracket, out_row3(bracket, a, b, y), 1, x, z));
                        vec_add(rhs, tri_slot(bracket, out_row3(bracket, a, b, z), 2, x, y));
                        rep.tally(lhs, rhs, "2.1", {a, b, x, y, z});
                    }
    rep.seconds = sw.elapsed();
    return rep;
}

Report check_leibniz(const DenseTensor& bracket) {
    const auto& s = bracket.shape();
    if (s.size() != 3 || s[0] != s[1] || s[0] != s[2])
        throw dim_error("Leibniz bracket must have shape [d,d,d]");
    const int d = s[0];
    Report rep;
    Stopwatch sw;
    auto br = [&](int i, int j) { const int idx[2] = {i, j}; return out_row(bracket, idx); };
    auto contract_left = [&](std::span<const Scalar> row, int j) {
        Vec out(static_cast<std::size_t>(d));
        for (int l = 0; l < d; ++l)
            if (!row[l].is_zero())
                for (int k = 0; k < d; ++k) out[k] += row[l] * br(l, j)[k];
        return out;
    };
    auto contract_right = [&](int i, std::span<const Scalar> row) {
        Vec out(static_cast<std::size_t>(d));
        for (int l = 0; l < d; ++l)
            if (!row[l].is_zero())
                for (int k = 0; k < d; ++k) out[k] += row[l] * br(i, l)[k];
        return out;
    };
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                Vec lhs = contract_right(x, br(y, z));
                Vec rhs = contract_left(br(x, y), z);
                vec_add(rhs, contract_right(y, br(x, z)));
                rep.tally(lhs, rhs, "leibniz", {x, y, z});
            }
    rep.seconds = sw.elapsed();
    return rep;
}

namespace {

// rho^l/rho^m/rho^r on (mixed basis/coefficient-row) arguments. g-slots take
// basis indices; the V slot takes a coefficient row.
Vec rho_l_on(const Representation& r, int i, int j, const Vec& u) {
    Vec out(static_cast<std::size_t>(r.dimV));
    for (int a = 0; a < r.dimV; ++a) {
        if (u[a].is_zero()) continue;
        const int idx[3] = {i, j, a};
        auto row = out_row(r.rho_l, idx);
        for (int b = 0; b < r.dimV; ++b) out[b] += u[a] * row[b];
    }
    return out;
}

Vec rho_m_on(const Representation& r, int i, const Vec& u, int j) {
    Vec out(static_cast<std::size_t>(r.dimV));
    for (int a = 0; a < r.dimV; ++a) {
        if (u[a].is_zero()) continue;
        const int idx[3] = {i, a, j};
        auto row = out_row(r.rho_m, idx);
        for (int b = 0; b < r.dimV; ++b) out[b] += u[a] * row[b];
    }
    return out;
}

Vec rho_r_on(const Representation& r, const Vec& u, int i, int j) {
    Vec out(static_cast<std::size_t>(r.dimV));
    for (int a = 0; a < r.dimV; ++a) {
        if (u[a].is_zero()) continue;
        const int idx[3] = {a, i, j};
        auto row = out_row(r.rho_r, idx);
        for (int b = 0; b < r.dimV; ++b) out[b] += u[a] * row[b];
    }
    return out;
}

// rho applied with one g-slot carrying a coefficient row instead of a basis
// index: slot is the position of the row among the two g-arguments.
Vec rho_g_row(const DenseTensor& rho, std::span<const Scalar> row, int slot3, int other, int upos, int ubasis, int dimV) {
    // rho has three input axes; upos is the V axis; slot3 is the g axis
    // carrying `row`; `other` fills the remaining g axis.
    Vec out(static_cast<std::size_t>(dimV));
    for (int l = 0; l < static_cast<int>(row.size()); ++l) {
        if (row[l].is_zero()) continue;
        int idx[3];
        idx[upos] = ubasis;
        idx[slot3] = l;
        for (int pos = 0; pos < 3; ++pos)
            if (pos != upos && pos != slot3) idx[pos] = other;
        auto r = out_row(rho, idx);
        for (int b = 0; b < dimV; ++b) out[b] += row[l] * r[b];
    }
    return out;
}

} // namespace

Report check_representation(const Representation& r) {
    const int d = r.algebra.dim, v = r.dimV;
    const std::vector<int> sl = {d, d, v, v}, sm = {d, v, d, v}, sr = {v, d, d, v};
    if (r.rho_l.shape() != sl || r.rho_m.shape() != sm || r.rho_r.shape() != sr)
        throw dim_error("representation tensor shapes inconsistent with (dim, dimV)");
    if (r.algebra.bracket.shape() != std::vector<int>{d, d, d, d})
        throw dim_error("representation algebra bracket shape mismatch");
    Report rep;
    Stopwatch sw;
    const DenseTensor& br = r.algebra.bracket;
    auto unit = [&](int a) { return basis_vec(v, a); };

    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                    for (int u = 0; u < v; ++u) {
                        // 2.2: rho^l(a,b,rho^l(x,y,u)) = rho^l([a,b,x],y,u) + rho^l(x,[a,b,y],u) + rho^l(x,y,rho^l(a,b,u))
                        {
                            Vec lhs = rho_l_on(r, a, b, rho_l_on(r, x, y, unit(u)));
                            Vec rhs = rho_g_row(r.rho_l, out_row3(br, a, b, x), 0, y, 2, u, v);
                            vec_add(rhs, rho_g_row(r.rho_l, out_row3(br, a, b, y), 1, x, 2, u, v));
                            vec_add(rhs, rho_l_on(r, x, y, rho_l_on(r, a, b, unit(u))));
                            rep.tally(lhs, rhs, "2.2", {a, b, x, y, u});
                        }
                        // 2.3: z := y. rho^l(a,b,rho^m(x,u,z)) = rho^m([a,b,x],u,z) + rho^m(x,rho^l(a,b,u),z) + rho^m(x,u,[a,b,z])
                        {
                            const int z = y;
                            Vec lhs = rho_l_on(r, a, b, rho_m_on(r, x, unit(u), z));
                            Vec rhs = rho_g_row(r.rho_m, out_row3(br, a, b, x), 0, z, 1, u, v);
                            vec_add(rhs, rho_m_on(r, x, rho_l_on(r, a, b, unit(u)), z));
                            vec_add(rhs, rho_g_row(r.rho_m, out_row3(br, a, b, z), 2, x, 1, u, v));
                            rep.tally(lhs, rhs, "2.3", {a, b, x, z, u});
                        }
                        // 2.4: rho^l(a,b,rho^r(u,y,z)) = rho^r(rho^l(a,b,u),y,z) + rho^r(u,[a,b,y],z) + rho^r(u,y,[a,b,z])
                        {
                            const int z = x; // reuse loop slots: tuple (a,b,y,z,u)
                            Vec lhs = rho_l_on(r, a, b, rho_r_on(r, unit(u), y, z));
                            Vec rhs = rho_r_on(r, rho_l_on(r, a, b, unit(u)), y, z);
                            vec_add(rhs, rho_g_row(r.rho_r, out_row3(br, a, b, y), 1, z, 0, u, v));
                            vec_add(rhs, rho_g_row(r.rho_r, out_row3(br, a, b, z), 2, y, 0, u, v));
                            rep.tally(lhs, rhs, "2.4", {a, b, y, z, u});
                        }
                        // 2.5: rho^m(a,u,[x,y,z]) = rho^r(rho^m(a,u,x),y,z) + rho^m(x,rho^m(a,u,y),z) + rho^l(x,y,rho^m(a,u,z))
                        {
                            const int z = b; // tuple (a,x,y,z,u)
                            Vec lhs = rho_g_row(r.rho_m, out_row3(br, x, y, z), 2, a, 1, u, v);
                            Vec rhs = rho_r_on(r, rho_m_on(r, a, unit(u), x), y, z);
                            vec_add(rhs, rho_m_on(r, x, rho_m_on(r, a, unit(u), y), z));
                            vec_add(rhs, rho_l_on(r, x, y, rho_m_on(r, a, unit(u), z)));
                            rep.tally(lhs, rhs, "2.5", {a, x, y, z, u});
                        }
                        // 2.6: rho^r(u,b,[x,y,z]) = rho^r(rho^r(u,b,x),y,z) + rho^m(x,rho^r(u,b,y),z) + rho^l(x,y,rho^r(u,b,z))
                        {
                            const int z = a; // tuple (b,x,y,z,u)
                            Vec lhs = rho_g_row(r.rho_r, out_row3(br, x, y, z), 2, b, 0, u, v);
                            Vec rhs = rho_r_on(r, rho_r_on(r, unit(u), b, x), y, z);
                            vec_add(rhs, rho_m_on(r, x, rho_r_on(r, unit(u), b, y), z));
                            vec_add(rhs, rho_l_on(r, x, y, rho_r_on(r, unit(u), b, z)));
                            rep.tally(lhs, rhs, "2.6", {b, x, y, z, u});
                        }
                    }
    rep.seconds = sw.elapsed();
    return rep;
}

Report check_leibniz_representation(const LeibnizRepresentation& r) {
    const int d = r.algebra.dim, v = r.dimV;
    if (r.rho_L.shape() != std::vector<int>{d, v, v} || r.rho_R.shape() != std::vector<int>{v, d, v})
        throw dim_error("Leibniz representation tensor shapes inconsistent");
    Report rep;
    Stopwatch sw;
    const DenseTensor& br = r.algebra.bracket;
    auto rl = [&](int x, const Vec& u) {
        Vec out(static_cast<std::size_t>(v));
        for (int a = 0; a < v; ++a) {
            if (u[a].is_zero()) continue;
            const int idx[2] = {x, a};
            auto row = out_row(r.rho_L, idx);
            for (int b = 0; b < v; ++b) out[b] += u[a] * row[b];
        }
        return out;
    };
    auto rr = [&](const Vec& u, int x) {
        Vec out(static_cast<std::size_t>(v));
        for (int a = 0; a < v; ++a) {
            if (u[a].is_zero()) continue;
            const int idx[2] = {a, x};
            auto row = out_row(r.rho_R, idx);
            for (int b = 0; b < v; ++b) out[b] += u[a] * row[b];
        }
        return out;
    };
    auto rl_row = [&](std::span<const Scalar> row, const Vec& u) {
        Vec out(static_cast<std::size_t>(v));
        for (int l = 0; l < d; ++l)
            if (!row[l].is_zero()) vec_axpy(out, row[l], rl(l, u));
        return out;
    };
    auto rr_row = [&](const Vec& u, std::span<const Scalar> row) {
        Vec out(static_cast<std::size_t>(v));
        for (int l = 0; l < d; ++l)
            if (!row[l].is_zero()) vec_axpy(out, row[l], rr(u, l));
        return out;
    };
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int u = 0; u < v; ++u) {
                const Vec eu = basis_vec(v, u);
                const int bxy[2] = {x, y};
                auto row = out_row(br, bxy);
                {
                    Vec lhs = rl(x, rl(y, eu));
                    Vec rhs = rl_row(row, eu);
                    vec_add(rhs, rl(y, rl(x, eu)));
                    rep.tally(lhs, rhs, "leibniz-rep-L", {x, y, u});
                }
                {
                    Vec lhs = rl(x, rr(eu, y));
                    Vec rhs = rr(rl(x, eu), y);
                    vec_add(rhs, rr_row(eu, row));
                    rep.tally(lhs, rhs, "leibniz-rep-LR", {x, y, u});
                }
                {
                    Vec lhs = rr_row(eu, row);
                    Vec rhs = rr(rr(eu, x), y);
                    vec_add(rhs, rl(x, rr(eu, y)));
                    rep.tally(lhs, rhs, "leibniz-rep-R", {x, y, u});
                }
            }
    rep.seconds = sw.elapsed();
    return rep;
}

ThreeLeibnizAlgebra threeleibniz_from_leibniz(const LeibnizAlgebra& l) {
    if (!check_leibniz(l).ok) throw precondition_error("threeleibniz_from_leibniz: input is not a Leibniz algebra");
    const int d = l.dim;
    ThreeLeibnizAlgebra out{d, DenseTensor({d, d, d, d})};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const int ij[2] = {i, j};
            auto row = out_row(l.bracket, ij);
            for (int k = 0; k < d; ++k)
                for (int m = 0; m < d; ++m) {
                    Scalar acc;
                    for (int t = 0; t < d; ++t) {
                        const int tk[2] = {t, k};
                        acc += row[t] * out_row(l.bracket, tk)[m];
                    }
                    out.bracket.at(std::vector<int>{i, j, k, m}) = acc;
                }
        }
    return out;
}

LeibnizAlgebra leibniz_on_tensor_square(const ThreeLeibnizAlgebra& a) {
    const int d = a.dim, n = d * d;
    LeibnizAlgebra out{n, DenseTensor({n, n, n})};
    for (int x1 = 0; x1 < d; ++x1)
        for (int x2 = 0; x2 < d; ++x2)
            for (int y1 = 0; y1 < d; ++y1)
                for (int y2 = 0; y2 < d; ++y2) {
                    const int i = x1 * d + x2, j = y1 * d + y2;
                    auto row1 = out_row3(a.bracket, x1, x2, y1);
                    for (int l = 0; l < d; ++l)
                        out.bracket.at(std::vector<int>{i, j, l * d + y2}) += row1[l];
                    auto row2 = out_row3(a.bracket, x1, x2, y2);
                    for (int l = 0; l < d; ++l)
                        out.bracket.at(std::vector<int>{i, j, y1 * d + l}) += row2[l];
                }
    return out;
}

Representation adjoint_rep(const ThreeLeibnizAlgebra& a) {
    return Representation{a, a.dim, a.bracket, a.bracket, a.bracket};
}

ThreeLeibnizAlgebra semidirect_product(const Representation& r) {
    if (!check_representation(r).ok) throw precondition_error("semidirect_product: not a representation");
    return semidirect_product_raw(r);
}

ThreeLeibnizAlgebra semidirect_product_raw(const Representation& r) {
    const int d = r.algebra.dim, v = r.dimV, n = d + v;
    ThreeLeibnizAlgebra out{n, DenseTensor({n, n, n, n})};
    auto set = [&](int i, int j, int k, int l, const Scalar& c) {
        out.bracket.at(std::vector<int>{i, j, k, l}) = c;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                auto row = out_row3(r.algebra.bracket, i, j, k);
                for (int l = 0; l < d; ++l) set(i, j, k, l, row[l]);
            }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int w = 0; w < v; ++w) {
                const int idx[3] = {i, j, w};
                auto row = out_row(r.rho_l, idx);
                for (int b = 0; b < v; ++b) set(i, j, d + w, d + b, row[b]);
            }
    for (int i = 0; i < d; ++i)
        for (int w = 0; w < v; ++w)
            for (int k = 0; k < d; ++k) {
                const int idx[3] = {i, w, k};
                auto row = out_row(r.rho_m, idx);
                for (int b = 0; b < v; ++b) set(i, d + w, k, d + b, row[b]);
            }
    for (int w = 0; w < v; ++w)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const int idx[3] = {w, j, k};
                auto row = out_row(r.rho_r, idx);
                for (int b = 0; b < v; ++b) set(d + w, j, k, d + b, row[b]);
            }
    return out;
}

Representation rep_from_leibniz_rep(const LeibnizRepresentation& lr) {
    if (!check_leibniz_representation(lr).ok)
        throw precondition_error("rep_from_leibniz_rep: not a Leibniz representation");
    const int d = lr.algebra.dim, v = lr.dimV;
    Representation out;
    out.algebra = threeleibniz_from_leibniz(lr.algebra);
    out.dimV = v;
    out.rho_l = DenseTensor({d, d, v, v});
    out.rho_m = DenseTensor({d, v, d, v});
    out.rho_r = DenseTensor({v, d, d, v});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const int ij[2] = {i, j};
            auto br = out_row(lr.algebra.bracket, ij);
            for (int a = 0; a < v; ++a)
                for (int b = 0; b < v; ++b) {
                    Scalar l_acc, r_acc;
                    for (int k = 0; k < d; ++k) {
                        if (br[k].is_zero()) continue;
                        const int ka[2] = {k, a};
                        l_acc += br[k] * out_row(lr.rho_L, ka)[b];
                        const int ak[2] = {a, k};
                        r_acc += br[k] * out_row(lr.rho_R, ak)[b];
                    }
                    out.rho_l.at(std::vector<int>{i, j, a, b}) = l_acc;
                    out.rho_r.at(std::vector<int>{a, i, j, b}) = r_acc;
                }
        }
    for (int i = 0; i < d; ++i)
        for (int a = 0; a < v; ++a) {
            const int ia[2] = {i, a};
            auto lrow = out_row(lr.rho_L, ia);
            for (int j = 0; j < d; ++j)
                for (int b = 0; b < v; ++b) {
                    Scalar acc;
                    for (int c = 0; c < v; ++c) {
                        if (lrow[c].is_zero()) continue;
                        const int cj[2] = {c, j};
                        acc += lrow[c] * out_row(lr.rho_R, cj)[b];
                    }
                    out.rho_m.at(std::vector<int>{i, a, j, b}) = acc;
                }
        }
    return out;
}

} // namespace l3kit
