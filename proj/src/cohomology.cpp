#include "cohomology.hpp"

namespace l3kit {

Cochain zero_cochain(int degree, Direction dir, int src, int dst) {
    if (degree < 1) throw dim_error("cochain degree must be >= 1");
    std::vector<int> shape(static_cast<std::size_t>(2 * degree - 1), src);
    shape.push_back(dst);
    return Cochain{degree, dir, DenseTensor(shape)};
}

void validate_cochain(const Cochain& f, int src, int dst) {
    if (f.degree < 1) throw dim_error("cochain degree must be >= 1");
    std::vector<int> shape(static_cast<std::size_t>(2 * f.degree - 1), src);
    shape.push_back(dst);
    if (f.coeffs.shape() != shape) throw dim_error("cochain coefficient shape mismatch");
}

ModuleData module_of(const Representation& r) {
    return ModuleData{r.algebra.dim, r.dimV, r.algebra.bracket, r.rho_l, r.rho_m, r.rho_r};
}

namespace {

// f evaluated on basis arguments: contiguous output row.
std::span<const Scalar> f_row(const DenseTensor& f, std::span<const int> args) {
    return out_row(f, args);
}

// Action tensors applied with two basis slots and one coefficient vector in
// the destination slot.
Vec act_l_on(const ModuleData& md, int i, int j, const Vec& w) {
    Vec out(static_cast<std::size_t>(md.dst));
    for (int a = 0; a < md.dst; ++a) {
        if (w[a].is_zero()) continue;
        const int idx[3] = {i, j, a};
        auto row = out_row(md.act_l, idx);
        for (int b = 0; b < md.dst; ++b) out[b] += w[a] * row[b];
    }
    return out;
}

Vec act_m_on(const ModuleData& md, int i, const Vec& w, int j) {
    Vec out(static_cast<std::size_t>(md.dst));
    for (int a = 0; a < md.dst; ++a) {
        if (w[a].is_zero()) continue;
        const int idx[3] = {i, a, j};
        auto row = out_row(md.act_m, idx);
        for (int b = 0; b < md.dst; ++b) out[b] += w[a] * row[b];
    }
    return out;
}

Vec act_r_on(const ModuleData& md, const Vec& w, int i, int j) {
    Vec out(static_cast<std::size_t>(md.dst));
    for (int a = 0; a < md.dst; ++a) {
        if (w[a].is_zero()) continue;
        const int idx[3] = {a, i, j};
        auto row = out_row(md.act_r, idx);
        for (int b = 0; b < md.dst; ++b) out[b] += w[a] * row[b];
    }
    return out;
}

} // namespace

DenseTensor coboundary_tensor(const ModuleData& md, const DenseTensor& f, int n) {
    const int s = md.src, d = md.dst;
    {
        std::vector<int> shape(static_cast<std::size_t>(2 * n - 1), s);
        shape.push_back(d);
        if (f.shape() != shape) throw dim_error("coboundary: cochain shape mismatch");
    }
    std::vector<int> out_shape(static_cast<std::size_t>(2 * n + 1), s);
    out_shape.push_back(d);
    DenseTensor out(out_shape);

    const std::vector<int> in_shape(static_cast<std::size_t>(2 * n + 1), s);
    DenseTensor::for_each_index(in_shape, [&](const Index& arg) {
        // arg: x_1,y_1,...,x_n,y_n,z
        const int z = arg[2 * n];
        Vec val(static_cast<std::size_t>(d));
        Index sub(static_cast<std::size_t>(2 * n - 1));

        // pair-insertion sum, j < k
        for (int j = 1; j <= n; ++j) {
            const int xj = arg[2 * (j - 1)], yj = arg[2 * (j - 1) + 1];
            const int sgn_j = (j % 2 == 0) ? 1 : -1;
            for (int k = j + 1; k <= n; ++k) {
                const int xk = arg[2 * (k - 1)], yk = arg[2 * (k - 1) + 1];
                // remaining pairs without X_j, with the pair at position of k
                // replaced by the inserted one; fill sub once per replacement.
                auto fill = [&](int repl_first, int repl_second) {
                    int pos = 0;
                    for (int i = 1; i <= n; ++i) {
                        if (i == j) continue;
                        if (i == k) {
                            sub[pos++] = repl_first;
                            sub[pos++] = repl_second;
                        } else {
                            sub[pos++] = arg[2 * (i - 1)];
                            sub[pos++] = arg[2 * (i - 1) + 1];
                        }
                    }
                    sub[pos] = z;
                };
                // x_k (x) [x_j,y_j,y_k]
                {
                    auto br = out_row3(md.bracket, xj, yj, yk);
                    for (int l = 0; l < s; ++l) {
                        if (br[l].is_zero()) continue;
                        fill(xk, l);
                        auto row = f_row(f, sub);
                        for (int b = 0; b < d; ++b)
                            if (!row[b].is_zero()) val[b] += Scalar(sgn_j) * br[l] * row[b];
                    }
                }
                // [x_j,y_j,x_k] (x) y_k
                {
                    auto br = out_row3(md.bracket, xj, yj, xk);
                    for (int l = 0; l < s; ++l) {
                        if (br[l].is_zero()) continue;
                        fill(l, yk);
                        auto row = f_row(f, sub);
                        for (int b = 0; b < d; ++b)
                            if (!row[b].is_zero()) val[b] += Scalar(sgn_j) * br[l] * row[b];
                    }
                }
            }
        }

        // last-slot sum and act_l sum
        for (int j = 1; j <= n; ++j) {
            const int xj = arg[2 * (j - 1)], yj = arg[2 * (j - 1) + 1];
            const int sgn_j = (j % 2 == 0) ? 1 : -1;
            int pos = 0;
            for (int i = 1; i <= n; ++i) {
                if (i == j) continue;
                sub[pos++] = arg[2 * (i - 1)];
                sub[pos++] = arg[2 * (i - 1) + 1];
            }
            // f(..X_j-hat.., [x_j,y_j,z])
            {
                auto br = out_row3(md.bracket, xj, yj, z);
                for (int l = 0; l < s; ++l) {
                    if (br[l].is_zero()) continue;
                    sub[pos] = l;
                    auto row = f_row(f, sub);
                    for (int b = 0; b < d; ++b)
                        if (!row[b].is_zero()) val[b] += Scalar(sgn_j) * br[l] * row[b];
                }
            }
            // act_l(x_j, y_j, f(..X_j-hat.., z))
            {
                sub[pos] = z;
                Vec fv(f_row(f, sub).begin(), f_row(f, sub).end());
                vec_axpy(val, Scalar(-sgn_j), act_l_on(md, xj, yj, fv));
            }
        }

        // final act_m / act_r terms
        {
            const int xn = arg[2 * (n - 1)], yn = arg[2 * (n - 1) + 1];
            const int sgn = (n % 2 == 0) ? -1 : 1; // (-1)^(n+1)
            int pos = 0;
            for (int i = 1; i < n; ++i) {
                sub[pos++] = arg[2 * (i - 1)];
                sub[pos++] = arg[2 * (i - 1) + 1];
            }
            sub[pos] = yn;
            Vec f_yn(f_row(f, sub).begin(), f_row(f, sub).end());
            sub[pos] = xn;
            Vec f_xn(f_row(f, sub).begin(), f_row(f, sub).end());
            vec_axpy(val, Scalar(sgn), act_m_on(md, xn, f_yn, z));
            vec_axpy(val, Scalar(sgn), act_r_on(md, f_xn, yn, z));
        }

        Index full = arg;
        full.push_back(0);
        for (int b = 0; b < d; ++b) {
            full.back() = b;
            if (!val[b].is_zero()) out.at(full) = val[b];
        }
    });
    return out;
}

Matrix coboundary_matrix(const ModuleData& md, int n) {
    const int s = md.src, d = md.dst;
    std::size_t cdim = static_cast<std::size_t>(d);
    for (int i = 0; i < 2 * n - 1; ++i) cdim *= static_cast<std::size_t>(s);
    std::size_t rdim = static_cast<std::size_t>(d);
    for (int i = 0; i < 2 * n + 1; ++i) rdim *= static_cast<std::size_t>(s);

    std::vector<int> shape(static_cast<std::size_t>(2 * n - 1), s);
    shape.push_back(d);
    Matrix m(static_cast<int>(rdim), static_cast<int>(cdim));
    for (std::size_t c = 0; c < cdim; ++c) {
        DenseTensor f(shape);
        f.flat(c) = Scalar(1);
        DenseTensor img = coboundary_tensor(md, f, n);
        for (std::size_t r = 0; r < rdim; ++r)
            if (!img.flat(r).is_zero()) m.at(static_cast<int>(r), static_cast<int>(c)) = img.flat(r);
    }
    return m;
}

Cochain coboundary(const Representation& r, const Cochain& f) {
    if (f.direction != Direction::g_to_V)
        throw precondition_error("coboundary: only C^*(g,V) cochains; V->g cochains live in the twisted complex");
    validate_cochain(f, r.algebra.dim, r.dimV);
    ModuleData md = module_of(r);
    return Cochain{f.degree + 1, f.direction, coboundary_tensor(md, f.coeffs, f.degree)};
}

bool is_cocycle(const Representation& r, const Cochain& f) {
    return coboundary(r, f).coeffs.is_zero();
}

TwoCocycle make_two_cocycle(const Representation& r, Cochain phi) {
    if (phi.degree != 2 || phi.direction != Direction::g_to_V)
        throw precondition_error("a 2-cocycle must be a degree-2 cochain in C^*(g,V)");
    validate_cochain(phi, r.algebra.dim, r.dimV);
    if (!is_cocycle(r, phi)) throw precondition_error("2-cochain is not closed");
    return TwoCocycle{std::move(phi)};
}

int cohomology_dim(const Representation& r, int n) {
    if (n < 1) throw precondition_error("cohomology_dim: degree must be >= 1");
    ModuleData md = module_of(r);
    Matrix dn = coboundary_matrix(md, n);
    const int z = dn.cols() - rank(dn);
    const int b = (n == 1) ? 0 : rank(coboundary_matrix(md, n - 1));
    return z - b;
}

ThreeLeibnizAlgebra twisted_semidirect_raw(const Representation& r, const Cochain& phi) {
    validate_cochain(phi, r.algebra.dim, r.dimV);
    if (phi.degree != 2 || phi.direction != Direction::g_to_V)
        throw precondition_error("twisted semidirect product needs a degree-2 cochain on g with values in V");
    const int d = r.algebra.dim, v = r.dimV;
    ThreeLeibnizAlgebra out = semidirect_product_raw(r);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                auto row = out_row3(phi.coeffs, i, j, k);
                for (int b = 0; b < v; ++b)
                    out.bracket.at(std::vector<int>{i, j, k, d + b}) += row[b];
            }
    return out;
}

ThreeLeibnizAlgebra twisted_semidirect(const Representation& r, const TwoCocycle& phi) {
    if (!is_cocycle(r, phi.phi)) throw precondition_error("twisted_semidirect: cocycle is not closed");
    return twisted_semidirect_raw(r, phi.phi);
}

} // namespace l3kit
