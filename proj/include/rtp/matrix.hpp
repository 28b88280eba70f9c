#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rtp/rational.hpp"

namespace rtp {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

  Matrix transpose() const;
  /// Rows `row_idx` crossed with columns `col_idx`; indices are not validated here.
  Matrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  /// Leading rows x cols block.
  Matrix leading(std::size_t rows, std::size_t cols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Throws DimensionError when lhs.cols() != rhs.rows().
Matrix operator*(const Matrix& lhs, const Matrix& rhs);

std::string to_string(const Matrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// row denominators. Throws DimensionError for non-square input.
Rational determinant(const Matrix& m);

/// Determinant of the submatrix on `rowset` x `colset`. Both sets must be
/// strictly increasing, of equal length, and in range; otherwise ArgumentError.
Rational minor(const Matrix& m, std::span<const std::size_t> rowset, std::span<const std::size_t> colset);

}  // namespace rtp
