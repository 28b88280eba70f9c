#pragma once

// Seeded randomized implications shared by the unit and acceptance suites.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rtp/riordan.hpp"
#include "rtp/sequences.hpp"
#include "rtp/totalpos.hpp"

namespace rtp::props {

struct Tally {
  std::size_t cases = 0;
  std::size_t premise_held = 0;  // cases where the implication was not vacuous
  std::size_t violations = 0;
  std::string first_violation;
};

// Nonnegative single-digit prefixes. Every other draw comes from a product
// of (1 + c x) factors, which is PF, so premises hold often enough to matter.
class SpecGenerator {
 public:
  explicit SpecGenerator(std::uint32_t seed) : rng_(seed) {}

  std::vector<Rational> digits(std::size_t min_len, std::size_t max_len, bool positive_head) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<long> digit(0, 9);
    std::uniform_int_distribution<long> head(1, 9);
    std::vector<Rational> out(len(rng_));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (i == 0 && positive_head) ? head(rng_) : digit(rng_);
    return out;
  }

  std::vector<Rational> pf_prefix() {
    std::uniform_int_distribution<int> degree(1, 3);
    std::uniform_int_distribution<long> root(1, 3);
    std::vector<Rational> coeffs{Rational(1)};
    for (int d = degree(rng_); d > 0; --d) {
      const Rational c = root(rng_);
      std::vector<Rational> next(coeffs.size() + 1);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i] += coeffs[i];
        next[i + 1] += coeffs[i] * c;
      }
      coeffs = std::move(next);
    }
    return coeffs;
  }

  std::vector<Rational> a_prefix() { return flip() ? pf_prefix() : digits(1, 4, true); }

  seq::Tail tail() { return flip() ? seq::Tail::zero : seq::Tail::repeat_last; }

  riordan::RiordanSpec any_spec() {
    auto a = a_prefix();
    const auto a_tail = a.back().is_zero() ? seq::Tail::zero : tail();
    auto z = flip() ? digits(0, 4, false) : std::vector<Rational>(a.begin() + 1, a.end());
    const auto z_tail = z.empty() ? seq::Tail::zero : tail();
    return riordan::RiordanSpec(seq::SequenceSpec(std::move(a), a_tail), seq::SequenceSpec(std::move(z), z_tail));
  }

  bool flip() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

 private:
  std::mt19937 rng_;
};

inline std::string describe(const riordan::RiordanSpec& spec) {
  auto join = [](const seq::SequenceSpec& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.prefix().size(); ++i) out += (i ? "," : "") + s.prefix()[i].to_string();
    return out + ";" + seq::to_string(s.tail()) + ")";
  };
  return "A=" + join(spec.a_seq) + " Z=" + join(spec.z_seq);
}

// J window TP_2 implies R window TP_2 (same window size).
inline Tally theorem1_tp2(std::uint32_t seed, std::size_t cases, std::size_t window) {
  SpecGenerator gen(seed);
  Tally tally;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto spec = gen.any_spec();
    const auto report = tp::triangle_tp_check(spec, tp::Order::of(2), window);
    ++tally.cases;
    if (!report.coefficient.holds) continue;
    ++tally.premise_held;
    if (!report.triangle.holds) {
      if (tally.violations++ == 0) tally.first_violation = describe(spec);
    }
  }
  return tally;
}

// J window TP_2 with z >= 0 implies a log-convex column 0.
inline Tally theorem1_logconvex(std::uint32_t seed, std::size_t cases, std::size_t window) {
  SpecGenerator gen(seed);
  Tally tally;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto spec = gen.any_spec();
    ++tally.cases;
    if (!tp::is_tp_r(riordan::coefficient_matrix(spec, window), tp::Order::of(2)).holds) continue;
    ++tally.premise_held;
    if (!tp::column0_logconvex_check(spec, window)) {
      if (tally.violations++ == 0) tally.first_violation = describe(spec);
    }
  }
  return tally;
}

// Consistent (Z = A) or quasi-consistent (Z = A shifted left) arrays. A
// log-concave A window gives TP_2 and log-concave rows; a PF A prefix
// (zero tail) gives TP on the window.
inline Tally theorem3(std::uint32_t seed, std::size_t cases, std::size_t window, std::size_t tp_window) {
  SpecGenerator gen(seed);
  Tally tally;
  for (std::size_t c = 0; c < cases; ++c) {
    auto a = gen.a_prefix();
    const auto tail = a.back().is_zero() ? seq::Tail::zero : gen.tail();
    const bool consistent = gen.flip();
    const seq::SequenceSpec a_seq(a, tail);
    std::vector<Rational> z = consistent ? a : std::vector<Rational>(a.begin() + 1, a.end());
    if (z.empty() && tail == seq::Tail::repeat_last) z.push_back(a.back());
    const seq::SequenceSpec z_seq(z, z.empty() ? seq::Tail::zero : tail);
    const riordan::RiordanSpec spec(a_seq, z_seq);
    ++tally.cases;

    const bool log_concave = seq::is_log_concave(a_seq.terms(window));
    const bool pf = tail == seq::Tail::zero && seq::is_pf_finite(a).holds;
    if (!log_concave && !pf) continue;
    ++tally.premise_held;

    bool ok = true;
    if (log_concave) {
      ok = ok && tp::rows_logconcave_check(spec, window).holds;
      ok = ok && tp::triangle_tp_check(spec, tp::Order::of(2), window).triangle.holds;
      ok = ok && tp::column0_logconvex_check(spec, window);
    }
    if (pf) ok = ok && tp::triangle_tp_check(spec, tp::Order::all(), tp_window).triangle.holds;
    if (!ok) {
      if (tally.violations++ == 0) tally.first_violation = describe(spec);
    }
  }
  return tally;
}

}  // namespace rtp::props
