#include "linalg.hpp"

namespace l3kit {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dim_error("matrix shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dim_error("matrix shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
    for (auto& x : e_) x *= c;
    return *this;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw dim_error("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Vec Matrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw dim_error("matrix/vector shape mismatch");
    Vec y(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
    return y;
}

// Fraction-free forward elimination (Bareiss). Each row is first scaled to
// integers; after step k every entry is a (k+1)x(k+1) minor of the scaled
// input, so the division by the previous pivot is exact.
namespace {

struct IntEchelon {
    std::vector<std::vector<mpz_class>> z;
    std::vector<int> pivot_cols;
};

IntEchelon bareiss(const Matrix& a) {
    const int rows = a.rows(), cols = a.cols();
    IntEchelon ech;
    ech.z.assign(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).den().get_mpz_t());
        for (int j = 0; j < cols; ++j) ech.z[i][j] = a.at(i, j).num() * (l / a.at(i, j).den());
    }
    mpz_class prev(1);
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (ech.z[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) std::swap(ech.z[piv], ech.z[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                mpz_class t = ech.z[r][col] * ech.z[i][j] - ech.z[i][col] * ech.z[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                ech.z[i][j] = t;
            }
            ech.z[i][col] = 0;
        }
        prev = ech.z[r][col];
        ech.pivot_cols.push_back(col);
        ++r;
    }
    return ech;
}

} // namespace

Rref rref(const Matrix& a) {
    IntEchelon ech = bareiss(a);
    Rref out;
    out.pivot_cols = ech.pivot_cols;
    out.m = Matrix(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.m.at(i, j) = Scalar(mpq_class(ech.z[i][j]));
    // Normalize pivots and eliminate upwards; exactness keeps this cheap.
    for (int p = static_cast<int>(out.pivot_cols.size()) - 1; p >= 0; --p) {
        const int col = out.pivot_cols[p];
        const Scalar inv = Scalar(1) / out.m.at(p, col);
        for (int j = col; j < a.cols(); ++j) out.m.at(p, j) *= inv;
        for (int i = 0; i < p; ++i) {
            const Scalar f = out.m.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < a.cols(); ++j) out.m.at(i, j) -= f * out.m.at(p, j);
        }
    }
    return out;
}

int rank(const Matrix& a) { return static_cast<int>(bareiss(a).pivot_cols.size()); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw dim_error("solve: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Rref r = rref(aug);
    for (int col : r.pivot_cols)
        if (col == a.cols()) return std::nullopt;
    Vec x(static_cast<std::size_t>(a.cols()));
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
        x[r.pivot_cols[p]] = r.m.at(static_cast<int>(p), a.cols());
    return x;
}

std::vector<Vec> kernel_basis(const Matrix& a) {
    Rref r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int col : r.pivot_cols) is_pivot[col] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(static_cast<std::size_t>(a.cols()));
        v[f] = Scalar(1);
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            v[r.pivot_cols[p]] = -r.m.at(static_cast<int>(p), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const int n = a.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    Rref r = rref(aug);
    if (static_cast<int>(r.pivot_cols.size()) != n || r.pivot_cols.back() != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
    return inv;
}

} // namespace l3kit
