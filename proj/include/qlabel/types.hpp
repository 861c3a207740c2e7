// Small dense complex/real matrix types shared across the library.
// Everything here is a plain value type; dimensions are fixed at
// construction and all storage is row-major contiguous.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qlabel {

using cx = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cx> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("ComplexMatrix: data size mismatch");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cx* row(std::size_t i) { return data_.data() + i * cols_; }
    const cx* row(std::size_t i) const { return data_.data() + i * cols_; }

    cx* data() { return data_.data(); }
    const cx* data() const { return data_.data(); }

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cx> data_;
};

class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const double& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double sum() const {
        double s = 0.0;
        for (double v : data_) s += v;
        return s;
    }

    bool operator==(const RealMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

} // namespace qlabel
