#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rtp/rational.hpp"

namespace rtp {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of x^i; trailing zeros are trimmed, so the zero polynomial
/// has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

  /// Monic linear factor x - root.
  static Polynomial linear_root(const Rational& root);

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;
  /// Divides by a positive rational so the coefficients become coprime
  /// integers. Signs, and therefore Sturm sign counts, are unchanged.
  Polynomial primitive() const;
  Polynomial monic() const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& p, const Rational& c);
  friend Polynomial operator-(const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws DomainError when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// p / gcd(p, p'): same roots, each simple.
Polynomial squarefree_part(const Polynomial& p);

/// Sturm chain p, p', -rem(p, p'), ... with each member made primitive.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Number of distinct real roots of p. Throws DomainError for the zero polynomial.
std::size_t count_distinct_real_roots(const Polynomial& p);

}  // namespace rtp
