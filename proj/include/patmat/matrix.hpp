#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "patmat/rational.hpp"

namespace patmat {

// Dense row-major matrix over an exact or floating scalar.
template <class T>
class DenseMatrix {
  public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& entries() const { return data_; }
    std::vector<T>& entries() { return data_; }

    DenseMatrix transposed() const {
        DenseMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
        return out;
    }

    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        DenseMatrix out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = at(r, k);
                if (a == T(0)) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) out.at(r, c) += a * o.at(k, c);
            }
        return out;
    }

    bool operator==(const DenseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    // Entrywise inner product <A,B>.
    T inner(const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("inner: shape mismatch");
        T s(0);
        for (std::size_t i = 0; i < data_.size(); ++i) s += data_[i] * o.data_[i];
        return s;
    }

    DenseMatrix hadamard(const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("hadamard: shape mismatch");
        DenseMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * o.data_[i];
        return out;
    }

    T frobenius_sq() const {
        T s(0);
        for (const T& v : data_) s += v * v;
        return s;
    }

    // Entrywise 1-norm.
    T abs_sum() const;

    T trace() const {
        T s(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
        return s;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

template <>
inline Rational DenseMatrix<Rational>::abs_sum() const {
    Rational s(0);
    for (const Rational& v : data_) s += v.abs();
    return s;
}

template <>
inline double DenseMatrix<double>::abs_sum() const {
    double s = 0;
    for (double v : data_) s += std::fabs(v);
    return s;
}

using RationalMatrix = DenseMatrix<Rational>;
using FloatMatrix = DenseMatrix<double>;

inline FloatMatrix to_float(const RationalMatrix& m) {
    FloatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).to_double();
    return out;
}

}  // namespace patmat
