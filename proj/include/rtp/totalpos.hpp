#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rtp/matrix.hpp"
#include "rtp/minor_scan.hpp"
#include "rtp/rational.hpp"
#include "rtp/riordan.hpp"

namespace rtp::tp {

/// Verdicts on the R window and the matching J(R) window. Since R's leading
/// n-row block only depends on J's leading n x n block, a holding
/// coefficient verdict implies a holding triangle verdict.
struct TriangleTPReport {
  TPReport triangle;
  TPReport coefficient;
};

TriangleTPReport triangle_tp_check(const riordan::RiordanSpec& spec, Order order, std::size_t n_rows,
                                   const ScanOptions& options = {});

/// Tridiagonal matrix with a, b in the top-left corner, s on the rest of the
/// diagonal, r above it and t below it.
struct JacobiParams {
  /// Throws DomainError on a negative parameter.
  JacobiParams(Rational a, Rational b, Rational r, Rational s, Rational t);

  Rational a;
  Rational b;
  Rational r;
  Rational s;
  Rational t;
};

Matrix jacobi_matrix(const JacobiParams& p, std::size_t n);

/// a s >= b r and s^2 >= r t.
bool jacobi_tp2_criterion(const JacobiParams& p);

/// s^2 >= 4 r t and a (s + sqrt(s^2 - 4 r t)) / 2 >= b r, decided exactly.
bool jacobi_tp_criterion(const JacobiParams& p);

/// d_0 .. d_{count-1} with d_0 = 1, d_1 = s, d_n = s d_{n-1} - r t d_{n-2}.
/// These are the n x n contiguous tridiagonal minors of J below the corner.
std::vector<Rational> d_sequence(const Rational& r, const Rational& s, const Rational& t, std::size_t count);

/// D_0 .. D_{count-1} with D_0 = a and D_n = a d_n - b r d_{n-1}: the
/// leading (n+1) x (n+1) minors of J.
std::vector<Rational> big_d_sequence(const JacobiParams& p, std::size_t count);

/// Symmetric window h_{i,j} = c_{i+j} of the largest size fully defined by c.
class HankelWindow {
 public:
  /// Throws ArgumentError for an empty sequence.
  explicit HankelWindow(std::span<const Rational> col0);

  std::size_t size() const noexcept { return matrix_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  const Matrix& matrix() const noexcept { return matrix_; }

 private:
  Matrix matrix_;
};

HankelWindow hankel_window(std::span<const Rational> col0);

/// Diagonal used in H = R T R^T.
enum class AignerDiagonal {
  powers_of_t,  // diag(1, t, t^2, ...)
  stieltjes,    // diag(1, b, b t, b t^2, ...): the weight products of R(a,b;s,t)
};

struct HankelMismatch {
  std::size_t row;
  std::size_t col;
  Rational hankel;   // r_{i+j,0}
  Rational product;  // (R T R^T)_{i,j}
};

struct AignerReport {
  bool holds = true;
  std::optional<HankelMismatch> mismatch;  // first differing entry, row-major
  Rational hankel_determinant;
  Rational diagonal_determinant;  // det T_n
};

/// Compares H_n against R_n T_n R_n^T for R(a,b;s,t). Throws ArgumentError for n == 0.
AignerReport aigner_decomposition_check(const riordan::RecursiveMatrixParams& p, std::size_t n,
                                        AignerDiagonal diagonal = AignerDiagonal::powers_of_t);

struct Theorem2Verdict {
  bool logconvex_guaranteed = false;
  bool tp_guaranteed = false;
};

/// Sufficient conditions for R(a,b;s,t): as >= b and s^2 >= t (log-convex
/// column 0); s^2 >= 4t and a (s + sqrt(s^2 - 4t)) / 2 >= b (TP).
Theorem2Verdict theorem2_classifier(const riordan::RecursiveMatrixParams& p);

bool column0_logconvex_check(const riordan::RiordanSpec& spec, std::size_t n_rows);

struct RowsReport {
  bool holds = true;
  std::optional<std::size_t> first_failing_row;
};

RowsReport rows_logconcave_check(const riordan::RiordanSpec& spec, std::size_t n_rows);

}  // namespace rtp::tp
