#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "flopk/errors.hpp"
#include "flopk/numeric.hpp"

namespace flopk {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, const std::vector<T>& values) {
    if (values.size() != rows_) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& lhs = a(i, k);
        if (lhs == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += lhs * b(k, j);
      }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw DomainError("matrix-vector dimension mismatch");
    std::vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws DomainError for non-square input.
Integer determinant(const IntegerMatrix& m);

/// Determinant over the rationals by Gaussian elimination.
Rational determinant(const RationalMatrix& m);

/// Inverse over the rationals, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

RationalMatrix to_rational(const IntegerMatrix& m);

/// Invariant factors d1 | d2 | ... of the Smith normal form, one per
/// diagonal position (min(rows, cols) entries, zeros for rank deficiency).
std::vector<Integer> smith_normal_form(const IntegerMatrix& m);

/// det = +-1. Throws DomainError for non-square input.
bool is_unimodular(const IntegerMatrix& m);

}  // namespace flopk
