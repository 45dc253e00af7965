#pragma once

#include "tensor.hpp"

#include <optional>
#include <vector>

namespace l3kit {

// Dense rational matrix, row-major.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw dim_error("negative matrix dimension");
    }

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }
    Scalar& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }

    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& c, Matrix m) { return m *= c; }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Matrix mul(const Matrix& o) const;
    Vec apply(const Vec& x) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

// Reduced row echelon form with the pivot columns that produced it. The
// forward pass is fraction-free (Bareiss) over integers after clearing row
// denominators; pivoting is deterministic (first nonzero row in column order).
struct Rref {
    Matrix m;
    std::vector<int> pivot_cols;
};

Rref rref(const Matrix& a);

int rank(const Matrix& a);

// A particular solution of a.x = b, or nullopt when inconsistent. Free
// variables are set to zero, so the output is deterministic.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Basis of the null space, one vector per free column in ascending order.
std::vector<Vec> kernel_basis(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

} // namespace l3kit
