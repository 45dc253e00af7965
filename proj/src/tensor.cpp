#include "tensor.hpp"

namespace l3kit {

DenseTensor::DenseTensor(std::vector<int> shape) : shape_(std::move(shape)) {
    std::size_t n = 1;
    strides_.assign(shape_.size(), 1);
    for (int i = static_cast<int>(shape_.size()) - 1; i >= 0; --i) {
        if (shape_[i] < 0) throw dim_error("negative axis size");
        strides_[i] = n;
        n *= static_cast<std::size_t>(shape_[i]);
    }
    entries_.assign(n, Scalar());
}

std::size_t DenseTensor::flat_index(std::span<const int> idx) const {
    if (idx.size() != shape_.size()) throw dim_error("index rank mismatch");
    std::size_t f = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= shape_[i]) throw dim_error("index out of range");
        f += strides_[i] * static_cast<std::size_t>(idx[i]);
    }
    return f;
}

Index DenseTensor::multi_index(std::size_t flat) const {
    Index idx(shape_.size());
    for (std::size_t i = 0; i < shape_.size(); ++i) {
        idx[i] = static_cast<int>(flat / strides_[i]);
        flat %= strides_[i];
    }
    return idx;
}

bool DenseTensor::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& o) {
    if (shape_ != o.shape_) throw dim_error("tensor shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

DenseTensor& DenseTensor::operator-=(const DenseTensor& o) {
    if (shape_ != o.shape_) throw dim_error("tensor shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

DenseTensor& DenseTensor::operator*=(const Scalar& c) {
    for (auto& e : entries_) e *= c;
    return *this;
}

} // namespace l3kit
