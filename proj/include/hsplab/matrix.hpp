#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hsplab/cyclotomic.hpp"

namespace hsplab {

/// Dense square-or-rectangular matrix over Z[ζ], row-major.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  CycMatrix(std::size_t rows, std::size_t cols, std::vector<CyclotomicInteger> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("CycMatrix: data size mismatch");
  }

  static CycMatrix identity(std::size_t n) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  CyclotomicInteger& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CyclotomicInteger& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<CyclotomicInteger>& entries() const noexcept { return data_; }

  CyclotomicInteger trace() const {
    CyclotomicInteger t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  CycMatrix adjoint() const {
    CycMatrix a(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) a(c, r) = (*this)(r, c).conj();
    return a;
  }

  bool is_zero() const {
    for (const auto& z : data_)
      if (!z.is_zero()) return false;
    return true;
  }

  /// Σ |a_ij|², exact; integral because every entry is an algebraic integer
  /// and the sum is real and Galois-stable for the matrices used here.
  CyclotomicInteger frobenius_norm_squared() const {
    CyclotomicInteger s = 0;
    for (const auto& z : data_) s += z * z.conj();
    return s;
  }

  CycMatrix& operator+=(const CycMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CycMatrix: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("CycMatrix: shape mismatch in product");
    CycMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CyclotomicInteger> data_;
};

inline CycMatrix matrix_power(const CycMatrix& m, unsigned e) {
  CycMatrix r = CycMatrix::identity(m.rows());
  for (unsigned i = 0; i < e; ++i) r = r * m;
  return r;
}

}  // namespace hsplab
