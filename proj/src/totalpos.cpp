#include "rtp/totalpos.hpp"

#include "rtp/errors.hpp"
#include "rtp/sequences.hpp"

namespace rtp::tp {

TriangleTPReport triangle_tp_check(const riordan::RiordanSpec& spec, Order order, std::size_t n_rows,
                                   const ScanOptions& options) {
  const auto tri = riordan::build_triangle(spec, n_rows);
  return {is_tp_r(tri.to_matrix(), order, options),
          is_tp_r(riordan::coefficient_matrix(spec, n_rows), order, options)};
}

JacobiParams::JacobiParams(Rational a_, Rational b_, Rational r_, Rational s_, Rational t_)
    : a(std::move(a_)), b(std::move(b_)), r(std::move(r_)), s(std::move(s_)), t(std::move(t_)) {
  for (const Rational* x : {&a, &b, &r, &s, &t}) {
    if (x->sign() < 0) throw DomainError("Jacobi parameters must be nonnegative");
  }
}

Matrix jacobi_matrix(const JacobiParams& p, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = i == 0 ? p.a : p.s;
    if (i + 1 < n) m(i, i + 1) = p.r;
    if (i >= 1) m(i, i - 1) = i == 1 ? p.b : p.t;
  }
  return m;
}

bool jacobi_tp2_criterion(const JacobiParams& p) { return p.a * p.s >= p.b * p.r && p.s * p.s >= p.r * p.t; }

bool jacobi_tp_criterion(const JacobiParams& p) {
  const Rational disc = p.s * p.s - Rational(4) * p.r * p.t;
  if (disc.sign() < 0) return false;
  // a (s + sqrt(disc)) >= 2 b r  <=>  a sqrt(disc) >= 2 b r - a s.
  const Rational gap = Rational(2) * p.b * p.r - p.a * p.s;
  if (gap.sign() <= 0) return true;
  return p.a * p.a * disc >= gap * gap;
}

std::vector<Rational> d_sequence(const Rational& r, const Rational& s, const Rational& t, std::size_t count) {
  if (count == 0) throw ArgumentError("count must be at least 1");
  std::vector<Rational> d;
  d.reserve(count);
  d.push_back(Rational(1));
  if (count > 1) d.push_back(s);
  const Rational rt = r * t;
  for (std::size_t n = 2; n < count; ++n) d.push_back(s * d[n - 1] - rt * d[n - 2]);
  return d;
}

std::vector<Rational> big_d_sequence(const JacobiParams& p, std::size_t count) {
  const auto d = d_sequence(p.r, p.s, p.t, count);
  std::vector<Rational> big;
  big.reserve(count);
  big.push_back(p.a);
  for (std::size_t n = 1; n < count; ++n) big.push_back(p.a * d[n] - p.b * p.r * d[n - 1]);
  return big;
}

HankelWindow::HankelWindow(std::span<const Rational> col0) {
  if (col0.empty()) throw ArgumentError("Hankel window needs at least one term");
  const std::size_t n = (col0.size() + 1) / 2;
  matrix_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) matrix_(i, j) = col0[i + j];
}

HankelWindow hankel_window(std::span<const Rational> col0) { return HankelWindow(col0); }

AignerReport aigner_decomposition_check(const riordan::RecursiveMatrixParams& p, std::size_t n,
                                        AignerDiagonal diagonal) {
  if (n == 0) throw ArgumentError("window must be at least 1");
  const auto tri = riordan::build_recursive_matrix(p, 2 * n - 1);
  const Matrix r_n = tri.window(n);

  std::vector<Rational> weights(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (diagonal == AignerDiagonal::powers_of_t) weights[k] = pow(p.t, k);
    else weights[k] = k == 0 ? Rational(1) : p.b * pow(p.t, k - 1);
  }
  const Matrix product = r_n * Matrix::diagonal(weights) * r_n.transpose();
  const HankelWindow hankel(tri.column(0));

  AignerReport report;
  report.hankel_determinant = determinant(hankel.matrix());
  report.diagonal_determinant = Rational(1);
  for (const auto& w : weights) report.diagonal_determinant *= w;
  for (std::size_t i = 0; i < n && report.holds; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (hankel(i, j) != product(i, j)) {
        report.holds = false;
        report.mismatch = HankelMismatch{i, j, hankel(i, j), product(i, j)};
        break;
      }
    }
  }
  return report;
}

Theorem2Verdict theorem2_classifier(const riordan::RecursiveMatrixParams& p) {
  const JacobiParams j(p.a, p.b, Rational(1), p.s, p.t);
  return {jacobi_tp2_criterion(j), jacobi_tp_criterion(j)};
}

bool column0_logconvex_check(const riordan::RiordanSpec& spec, std::size_t n_rows) {
  return seq::is_log_convex(riordan::build_triangle(spec, n_rows).column(0));
}

RowsReport rows_logconcave_check(const riordan::RiordanSpec& spec, std::size_t n_rows) {
  const auto tri = riordan::build_triangle(spec, n_rows);
  for (std::size_t n = 0; n < tri.n_rows(); ++n) {
    if (!seq::is_log_concave(tri.row(n))) return {false, n};
  }
  return {};
}

}  // namespace rtp::tp
