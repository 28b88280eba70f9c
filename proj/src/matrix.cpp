#include "rtp/matrix.hpp"

#include <sstream>
#include <utility>

#include "rtp/detail/bareiss.hpp"
#include "rtp/errors.hpp"

namespace rtp {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  Matrix sub(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) sub(i, j) = (*this)(row_idx[i], col_idx[j]);
  return sub;
}

Matrix Matrix::leading(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) throw DimensionError("leading block larger than matrix");
  Matrix sub(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) sub(i, j) = (*this)(i, j);
  return sub;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw DimensionError("matrix product shape mismatch");
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rational& x = lhs(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += x * rhs(k, j);
    }
  }
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace detail {

mpz_class bareiss_determinant(std::vector<mpz_class>& a, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev_pivot = 1;
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev_pivot.get_mpz_t());
      }
    }
    prev_pivot = at(k, k);
  }
  mpz_class det = at(n - 1, n - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

}  // namespace detail

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<mpz_class> scaled(n * n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) scaled[i * n + j] = m(i, j).numerator() * (row_lcm / m(i, j).denominator());
    scale *= row_lcm;
  }
  return Rational(detail::bareiss_determinant(scaled, n), scale);
}

Rational minor(const Matrix& m, std::span<const std::size_t> rowset, std::span<const std::size_t> colset) {
  if (rowset.size() != colset.size()) throw ArgumentError("minor: row and column sets differ in size");
  auto check = [](std::span<const std::size_t> set, std::size_t bound, const char* what) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] >= bound) throw ArgumentError(std::string("minor: ") + what + " index out of range");
      if (i > 0 && set[i] <= set[i - 1]) throw ArgumentError(std::string("minor: ") + what + " set not increasing");
    }
  };
  check(rowset, m.rows(), "row");
  check(colset, m.cols(), "column");
  return determinant(m.select(rowset, colset));
}

}  // namespace rtp
