#pragma once

// Reference computations for tests. Nothing here calls the determinant,
// minor-scan, or recurrence code under test.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "rtp/matrix.hpp"
#include "rtp/polynomial.hpp"
#include "rtp/rational.hpp"

namespace rtp::oracle {

// Laplace expansion along the first row.
inline Rational cofactor_determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == c) continue;
        sub(i - 1, jj++) = m(i, j);
      }
    }
    const Rational term = m(0, c) * cofactor_determinant(sub);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

// All k-subsets of {0..n-1} by bitmask, lexicographically sorted.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1U << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct BruteWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rational value;
};

// First negative minor of order <= max_order (by order, then row set, then
// column set), computed by cofactor expansion.
inline std::optional<BruteWitness> first_negative_minor(const Matrix& m, std::size_t max_order) {
  const std::size_t side = std::min({m.rows(), m.cols(), max_order});
  for (std::size_t k = 1; k <= side; ++k) {
    const auto row_sets = subsets(m.rows(), k);
    const auto col_sets = subsets(m.cols(), k);
    for (const auto& rs : row_sets) {
      for (const auto& cs : col_sets) {
        const Rational v = cofactor_determinant(m.select(rs, cs));
        if (v.sign() < 0) return BruteWitness{rs, cs, v};
      }
    }
  }
  return std::nullopt;
}

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational out(1);
  for (long i = 1; i <= k; ++i) out = out * Rational(n - k + i) / Rational(i);
  return out;
}

inline std::vector<Rational> catalan_numbers(std::size_t count) {
  std::vector<Rational> out;
  for (std::size_t n = 0; n < count; ++n)
    out.push_back(binomial(2 * static_cast<long>(n), static_cast<long>(n)) / Rational(static_cast<long>(n) + 1));
  return out;
}

inline std::vector<Rational> central_binomials(std::size_t count) {
  std::vector<Rational> out;
  for (std::size_t n = 0; n < count; ++n) out.push_back(binomial(2 * static_cast<long>(n), static_cast<long>(n)));
  return out;
}

// M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-1-k}.
inline std::vector<Rational> motzkin_numbers(std::size_t count) {
  std::vector<Rational> m{Rational(1)};
  while (m.size() < count) {
    const std::size_t n = m.size() - 1;
    Rational next = m[n];
    for (std::size_t k = 0; k + 1 <= n; ++k) next += m[k] * m[n - 1 - k];
    m.push_back(next);
  }
  m.resize(count);
  return m;
}

// S_n = S_{n-1} + sum_{k=0}^{n-1} S_k S_{n-1-k}.
inline std::vector<Rational> large_schroder_numbers(std::size_t count) {
  std::vector<Rational> s{Rational(1)};
  while (s.size() < count) {
    const std::size_t n = s.size();
    Rational next = s[n - 1];
    for (std::size_t k = 0; k < n; ++k) next += s[k] * s[n - 1 - k];
    s.push_back(next);
  }
  s.resize(count);
  return s;
}

// Little Schroder numbers are half the large ones past index 0.
inline std::vector<Rational> little_schroder_numbers(std::size_t count) {
  auto s = large_schroder_numbers(count);
  for (std::size_t n = 1; n < s.size(); ++n) s[n] = s[n] / Rational(2);
  return s;
}

// prod (x + alpha_i).
inline Polynomial product_of_linear(const std::vector<Rational>& alphas) {
  Polynomial p{Rational(1)};
  for (const auto& a : alphas) p = p * Polynomial{a, Rational(1)};
  return p;
}

}  // namespace rtp::oracle
