#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hstar/arith.hpp"

namespace hstar {

/// Dense row-major matrix. Only the handful of exact operations the
/// polytope code needs are provided; there is no attempt at BLAS-style speed.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

/// Indices of the pivot columns of the reduced row echelon form.
std::vector<std::size_t> pivot_columns(RationalMatrix m);

// Solves a x = b for a with full column rank. Returns nullopt when the
// (possibly overdetermined) system is inconsistent.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

Rational determinant(RationalMatrix m);

RationalMatrix inverse(RationalMatrix m);

}  // namespace hstar
