#pragma once

#include "rational.hpp"

#include <span>
#include <vector>

namespace l3kit {

using Index = std::vector<int>;

// Dense tensor of Scalars. Entries are stored in lexicographic multi-index
// order, last axis fastest.
class DenseTensor {
  public:
    DenseTensor() = default;
    explicit DenseTensor(std::vector<int> shape);

    const std::vector<int>& shape() const { return shape_; }
    std::size_t size() const { return entries_.size(); }

    std::size_t flat_index(std::span<const int> idx) const;
    Index multi_index(std::size_t flat) const;

    const Scalar& at(std::span<const int> idx) const { return entries_[flat_index(idx)]; }
    Scalar& at(std::span<const int> idx) { return entries_[flat_index(idx)]; }
    const Scalar& flat(std::size_t i) const { return entries_[i]; }
    Scalar& flat(std::size_t i) { return entries_[i]; }

    bool is_zero() const;

    DenseTensor& operator+=(const DenseTensor& o);
    DenseTensor& operator-=(const DenseTensor& o);
    DenseTensor& operator*=(const Scalar& c);
    friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
    friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
    friend DenseTensor operator*(const Scalar& c, DenseTensor t) { return t *= c; }
    friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
        return a.shape_ == b.shape_ && a.entries_ == b.entries_;
    }

    // Iterates all multi-indices of the input axes [0, axes) in lexicographic
    // order, calling fn(idx).
    template <class Fn>
    static void for_each_index(std::span<const int> shape, Fn&& fn) {
        Index idx(shape.size(), 0);
        if (shape.empty()) {
            fn(idx);
            return;
        }
        for (int a : shape)
            if (a <= 0) return;
        while (true) {
            fn(idx);
            int ax = static_cast<int>(shape.size()) - 1;
            while (ax >= 0) {
                if (++idx[ax] < shape[ax]) break;
                idx[ax] = 0;
                --ax;
            }
            if (ax < 0) break;
        }
    }

  private:
    std::vector<int> shape_;
    std::vector<std::size_t> strides_;
    std::vector<Scalar> entries_;
};

// A coordinate vector (rank-1 tensor helper used when evaluating multilinear
// maps on basis tuples).
using Vec = std::vector<Scalar>;

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

inline bool vec_is_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

inline Vec& vec_add(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw dim_error("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec& vec_sub(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw dim_error("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vec& vec_scale(Vec& a, const Scalar& c) {
    for (auto& x : a) x *= c;
    return a;
}

inline Vec& vec_axpy(Vec& a, const Scalar& c, const Vec& b) {
    if (c.is_zero()) return a;
    if (a.size() != b.size()) throw dim_error("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    return a;
}

} // namespace l3kit
