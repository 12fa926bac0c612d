#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace kemeny {

/// Row-major dense matrix over an arbitrary scalar. Used for exact rational
/// and modular work where Eigen's numeric traits do not apply.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = T(1);
    return id;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  bool operator==(const DenseMatrix& other) const = default;

  DenseMatrix operator*(const DenseMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    DenseMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  DenseMatrix operator-(const DenseMatrix& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace kemeny
