#include "graded.hpp"

namespace l3kit {

GradedElement zero_graded(int degree, int dim) {
    if (degree < 0) throw dim_error("graded degree must be >= 0 for the bracket engine");
    std::vector<int> shape(static_cast<std::size_t>(2 * degree + 2), dim);
    return GradedElement{degree, dim, DenseTensor(shape)};
}

namespace {

// (a,b)-shuffles of {0..a+b-1}: sorted first part, sorted complement, and the
// permutation sign (inversions between the parts).
struct Shuffle {
    std::vector<int> first;
    std::vector<int> second;
    int sign = 1;
};

std::vector<Shuffle> shuffles(int a, int b) {
    std::vector<Shuffle> out;
    const int n = a + b;
    std::vector<int> comb(a);
    for (int i = 0; i < a; ++i) comb[i] = i;
    while (true) {
        Shuffle s;
        s.first = comb;
        std::vector<bool> in(n, false);
        for (int x : comb) in[x] = true;
        for (int x = 0; x < n; ++x)
            if (!in[x]) s.second.push_back(x);
        int inv = 0;
        for (int x : s.first)
            for (int y : s.second)
                if (x > y) ++inv;
        s.sign = (inv % 2 == 0) ? 1 : -1;
        out.push_back(std::move(s));
        if (a == 0) break;
        int i = a - 1;
        while (i >= 0 && comb[i] == n - a + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < a; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

// One additive term of the circle product: which input pairs feed Q (in
// order), which feed P, where the split pair sits, and the total sign.
struct CircleTerm {
    enum Kind { InsertFirst, InsertSecond, FinalSlot } kind;
    int split_pair = -1;          // output pair index whose component feeds Q (Insert*)
    std::vector<int> q_pairs;     // output pair indices routed to Q
    std::vector<int> p_pairs_pre; // P pair slots before the insertion slot
    std::vector<int> p_pairs_post;
    int sign = 1;
};

std::vector<CircleTerm> circle_terms(int p, int q) {
    std::vector<CircleTerm> terms;
    for (int k = 1; k <= p; ++k) {
        const int pre_sign = ((k - 1) * q % 2 == 0) ? 1 : -1;
        for (const Shuffle& s : shuffles(k - 1, q)) {
            for (auto kind : {CircleTerm::InsertFirst, CircleTerm::InsertSecond}) {
                CircleTerm t;
                t.kind = kind;
                t.split_pair = k + q - 1; // 0-based index of pair X_{k+q}
                t.q_pairs = s.second;
                t.p_pairs_pre = s.first;
                for (int i = k + q; i < p + q; ++i) t.p_pairs_post.push_back(i);
                t.sign = pre_sign * s.sign;
                terms.push_back(std::move(t));
            }
        }
    }
    const int pq_sign = (p * q % 2 == 0) ? 1 : -1;
    for (const Shuffle& s : shuffles(p, q)) {
        CircleTerm t;
        t.kind = CircleTerm::FinalSlot;
        t.q_pairs = s.second;
        t.p_pairs_pre = s.first;
        t.sign = pq_sign * s.sign;
        terms.push_back(std::move(t));
    }
    return terms;
}

} // namespace

std::size_t shuffle_count(int a, int b) { return shuffles(a, b).size(); }

GradedElement circle(const GradedElement& pe, const GradedElement& qe) {
    if (pe.dim != qe.dim) throw dim_error("circle: space dimension mismatch");
    const int p = pe.degree, q = qe.degree, w = pe.dim;
    GradedElement out = zero_graded(p + q, w);
    const auto terms = circle_terms(p, q);
    if (terms.empty()) return out;

    const std::vector<int> in_shape(static_cast<std::size_t>(2 * (p + q) + 1), w);
    Index qidx(static_cast<std::size_t>(2 * q + 1));
    Index pidx(static_cast<std::size_t>(2 * p + 1) + 1); // + output axis
    DenseTensor::for_each_index(in_shape, [&](const Index& in) {
        const int final_in = in[2 * (p + q)];
        Vec val(static_cast<std::size_t>(w));
        bool any = false;
        for (const CircleTerm& t : terms) {
            // Q's pair arguments
            int qp = 0;
            for (int pair : t.q_pairs) {
                qidx[qp++] = in[2 * pair];
                qidx[qp++] = in[2 * pair + 1];
            }
            // Q's final argument
            if (t.kind == CircleTerm::InsertFirst)
                qidx[qp] = in[2 * t.split_pair];
            else if (t.kind == CircleTerm::InsertSecond)
                qidx[qp] = in[2 * t.split_pair + 1];
            else
                qidx[qp] = final_in;
            // P's argument skeleton
            int pp = 0;
            for (int pair : t.p_pairs_pre) {
                pidx[pp++] = in[2 * pair];
                pidx[pp++] = in[2 * pair + 1];
            }
            int m_slot;
            if (t.kind == CircleTerm::InsertFirst) {
                m_slot = pp;
                pidx[pp++] = 0;
                pidx[pp++] = in[2 * t.split_pair + 1];
            } else if (t.kind == CircleTerm::InsertSecond) {
                pidx[pp] = in[2 * t.split_pair];
                m_slot = pp + 1;
                pp += 2;
                pidx[m_slot] = 0;
            } else {
                m_slot = -1;
            }
            for (int pair : t.p_pairs_post) {
                pidx[pp++] = in[2 * pair];
                pidx[pp++] = in[2 * pair + 1];
            }
            if (t.kind == CircleTerm::FinalSlot)
                m_slot = pp++;
            else
                pidx[pp++] = final_in;
            // contract over Q's output
            std::span<const int> q_span(qidx.data(), static_cast<std::size_t>(2 * q + 1));
            auto q_row = out_row(qe.coeffs, q_span);
            const Scalar sgn(t.sign);
            for (int m = 0; m < w; ++m) {
                if (q_row[m].is_zero()) continue;
                pidx[m_slot] = m;
                std::span<const int> p_span(pidx.data(), static_cast<std::size_t>(2 * p + 1));
                auto p_row = out_row(pe.coeffs, p_span);
                const Scalar c = sgn * q_row[m];
                for (int o = 0; o < w; ++o)
                    if (!p_row[o].is_zero()) {
                        val[o] += c * p_row[o];
                        any = true;
                    }
            }
        }
        if (!any) return;
        Index full = in;
        full.push_back(0);
        for (int o = 0; o < w; ++o) {
            full.back() = o;
            if (!val[o].is_zero()) out.coeffs.at(full) = val[o];
        }
    });
    return out;
}

GradedElement graded_bracket(const GradedElement& p, const GradedElement& q) {
    GradedElement a = circle(p, q);
    GradedElement b = circle(q, p);
    const int sgn = (p.degree * q.degree % 2 == 0) ? 1 : -1;
    a.coeffs -= Scalar(sgn) * b.coeffs;
    return a;
}

BigStructure build_pi(const TwistedSetup& s) {
    const int d = s.rep.algebra.dim, v = s.rep.dimV, w = d + v;
    GradedElement pi = zero_graded(1, w);
    ThreeLeibnizAlgebra big = twisted_semidirect(s.rep, s.phi);
    pi.coeffs = big.bracket;
    BigStructure b{s, std::move(pi), d, v};
    if (!graded_bracket(b.pi, b.pi).coeffs.is_zero())
        throw std::logic_error("build_pi: structure element does not square to zero");
    return b;
}

GradedElement lift(const Cochain& f, int dim_g, int dim_v) {
    if (f.direction != Direction::V_to_g) throw precondition_error("lift expects a V -> g cochain");
    validate_cochain(f, dim_v, dim_g);
    const int w = dim_g + dim_v, arity = 2 * f.degree - 1;
    GradedElement out = zero_graded(f.degree - 1, w);
    std::vector<int> in_shape(static_cast<std::size_t>(arity), dim_v);
    Index widx(static_cast<std::size_t>(arity) + 1);
    DenseTensor::for_each_index(in_shape, [&](const Index& vin) {
        auto row = out_row(f.coeffs, vin);
        for (int i = 0; i < arity; ++i) widx[i] = dim_g + vin[i];
        for (int o = 0; o < dim_g; ++o) {
            if (row[o].is_zero()) continue;
            widx[arity] = o;
            out.coeffs.at(widx) = row[o];
        }
    });
    return out;
}

Cochain project(const GradedElement& e, int dim_g, int dim_v) {
    if (e.dim != dim_g + dim_v) throw dim_error("project: space dimension mismatch");
    const int arity = 2 * e.degree + 1;
    Cochain out = zero_cochain(e.degree + 1, Direction::V_to_g, dim_v, dim_g);
    std::vector<int> in_shape(static_cast<std::size_t>(arity), dim_v);
    Index widx(static_cast<std::size_t>(arity) + 1);
    Index vidx(static_cast<std::size_t>(arity) + 1);
    DenseTensor::for_each_index(in_shape, [&](const Index& vin) {
        for (int i = 0; i < arity; ++i) {
            widx[i] = dim_g + vin[i];
            vidx[i] = vin[i];
        }
        for (int o = 0; o < dim_g; ++o) {
            widx[arity] = o;
            const Scalar& c = e.coeffs.at(widx);
            if (c.is_zero()) continue;
            vidx[arity] = o;
            out.coeffs.at(vidx) = c;
        }
    });
    return out;
}

GradedElement l3_w(const BigStructure& b, const GradedElement& p, const GradedElement& q, const GradedElement& r) {
    return graded_bracket(graded_bracket(graded_bracket(b.pi, p), q), r);
}

GradedElement l4_w(const BigStructure& b, const GradedElement& p, const GradedElement& q, const GradedElement& r,
                   const GradedElement& s) {
    return graded_bracket(l3_w(b, p, q, r), s);
}

Cochain l3(const BigStructure& b, const Cochain& p, const Cochain& q, const Cochain& r) {
    return project(l3_w(b, lift(p, b.dim_g, b.dim_v), lift(q, b.dim_g, b.dim_v), lift(r, b.dim_g, b.dim_v)),
                   b.dim_g, b.dim_v);
}

Cochain l4(const BigStructure& b, const Cochain& p, const Cochain& q, const Cochain& r, const Cochain& s) {
    return project(l4_w(b, lift(p, b.dim_g, b.dim_v), lift(q, b.dim_g, b.dim_v), lift(r, b.dim_g, b.dim_v),
                        lift(s, b.dim_g, b.dim_v)),
                   b.dim_g, b.dim_v);
}

Cochain mc_residual(const BigStructure& b, const LinearOperator& t) {
    const GradedElement lt = lift(cochain_from_operator(t, Direction::V_to_g), b.dim_g, b.dim_v);
    GradedElement e3 = l3_w(b, lt, lt, lt);
    GradedElement e4 = l4_w(b, lt, lt, lt, lt);
    e3.coeffs *= Scalar(1, 6);
    e4.coeffs *= Scalar(1, 24);
    e3.coeffs += e4.coeffs;
    return project(e3, b.dim_g, b.dim_v);
}

Cochain cochain_add(const Cochain& a, const Cochain& b2) {
    if (a.degree != b2.degree || a.direction != b2.direction)
        throw dim_error("cochain_add: degree or direction mismatch");
    Cochain out = a;
    out.coeffs += b2.coeffs;
    return out;
}

Cochain cochain_scale(const Scalar& c, const Cochain& a) {
    Cochain out = a;
    out.coeffs *= c;
    return out;
}

namespace {

void require_trbo(const BigStructure& b, const LinearOperator& t) {
    if (!check_trbo(b.setup, t).ok)
        throw precondition_error("twisted operations need a twisted Rota-Baxter operator");
}

GradedElement lift_op(const BigStructure& b, const LinearOperator& t) {
    return lift(cochain_from_operator(t, Direction::V_to_g), b.dim_g, b.dim_v);
}

} // namespace

Cochain l1_t(const BigStructure& b, const LinearOperator& t, const Cochain& p) {
    require_trbo(b, t);
    const GradedElement lt = lift_op(b, t), lp = lift(p, b.dim_g, b.dim_v);
    GradedElement e = l3_w(b, lt, lt, lp);
    e.coeffs *= Scalar(1, 2);
    GradedElement e4 = l4_w(b, lt, lt, lt, lp);
    e4.coeffs *= Scalar(1, 6);
    e.coeffs += e4.coeffs;
    return project(e, b.dim_g, b.dim_v);
}

Cochain l2_t(const BigStructure& b, const LinearOperator& t, const Cochain& p, const Cochain& q) {
    require_trbo(b, t);
    const GradedElement lt = lift_op(b, t), lp = lift(p, b.dim_g, b.dim_v), lq = lift(q, b.dim_g, b.dim_v);
    GradedElement e = l3_w(b, lt, lp, lq);
    GradedElement e4 = l4_w(b, lt, lt, lp, lq);
    e4.coeffs *= Scalar(1, 2);
    e.coeffs += e4.coeffs;
    return project(e, b.dim_g, b.dim_v);
}

Cochain l3_t(const BigStructure& b, const LinearOperator& t, const Cochain& p, const Cochain& q, const Cochain& r) {
    require_trbo(b, t);
    const GradedElement lt = lift_op(b, t);
    const GradedElement lp = lift(p, b.dim_g, b.dim_v), lq = lift(q, b.dim_g, b.dim_v), lr = lift(r, b.dim_g, b.dim_v);
    GradedElement e = l3_w(b, lp, lq, lr);
    e.coeffs += l4_w(b, lt, lp, lq, lr).coeffs;
    return project(e, b.dim_g, b.dim_v);
}

Cochain l4_t(const BigStructure& b, const LinearOperator& t, const Cochain& p, const Cochain& q, const Cochain& r,
             const Cochain& s) {
    require_trbo(b, t);
    return l4(b, p, q, r, s);
}

} // namespace l3kit
