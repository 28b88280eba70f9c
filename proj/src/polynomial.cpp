#include "rtp/polynomial.hpp"

#include <sstream>

#include "rtp/errors.hpp"

namespace rtp {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::linear_root(const Rational& root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& c : coeffs_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
  }
  const Rational factor(den_lcm, num_gcd);  // positive
  return *this * factor;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << '-';
    const Rational mag = c.sign() < 0 ? -c : c;
    if (i == 0 || mag != Rational(1)) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<Rational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.coeff(i) + rhs.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p) { return p * Rational(-1); }

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) { return lhs + (-rhs); }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& p, const Rational& c) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  if (num.degree() < den.degree()) return {Polynomial(), num};
  std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - den.degree() + 1));
  const auto dcoef = den.coeffs();
  const std::size_t dn = dcoef.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + dn] / dcoef[dn];
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[k + j] -= q * dcoef[j];
  }
  rem.resize(dn);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).first.primitive();
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p.primitive());
  Polynomial next = p.derivative().primitive();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& prev = chain[chain.size() - 2];
    next = (-divmod(prev, chain.back()).second).primitive();
  }
  return chain;
}

namespace {

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_distinct_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("real-root count of the zero polynomial is undefined");
  const Polynomial sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  const auto chain = sturm_chain(sf);
  std::vector<int> at_neg_inf;
  std::vector<int> at_pos_inf;
  for (const auto& q : chain) {
    const int lead = q.leading().sign();
    at_pos_inf.push_back(lead);
    at_neg_inf.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
}

}  // namespace rtp
