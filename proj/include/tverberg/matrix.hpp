#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tverberg/errors.hpp"

namespace tverberg {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transposed() const {
    Matrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_ = data_;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

inline constexpr std::size_t kDefaultDeterminantCap = 64;

/// Bareiss fraction-free elimination. `one` is the multiplicative identity
/// (needed for the empty matrix and as the initial divisor), `is_zero` tests
/// exact zero, and `divider(p)` returns a unary callable computing x / p, so
/// a field type can invert each pivot once per elimination step.
template <typename T, typename IsZero, typename Divider>
T bareiss_determinant(Matrix<T> m, const T& one, IsZero is_zero, Divider divider,
                      std::size_t cap = kDefaultDeterminantCap) {
  if (!m.square()) throw InvalidParameter("determinant of a non-square matrix");
  if (m.rows() > cap) throw SizeError("determinant size exceeds cap");
  const std::size_t n = m.rows();
  if (n == 0) return one;

  bool negate = false;
  T previous = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return one - one;
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    const auto divide = divider(previous);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = divide(m(i, j) * m(k, k) - m(i, k) * m(k, j));
      }
    }
    previous = m(k, k);
  }
  T result = m(n - 1, n - 1);
  return negate ? -result : result;
}

}  // namespace tverberg
