#include "rtp/sequences.hpp"

#include "rtp/errors.hpp"
#include "rtp/polynomial.hpp"

namespace rtp::seq {

SequenceSpec::SequenceSpec(std::vector<Rational> prefix, Tail tail) : prefix_(std::move(prefix)), tail_(tail) {
  for (const auto& x : prefix_) {
    if (x.sign() < 0) throw DomainError("sequence entries must be nonnegative, got " + x.to_string());
  }
  if (tail_ == Tail::repeat_last && prefix_.empty()) throw ArgumentError("repeat tail needs a nonempty prefix");
}

Rational SequenceSpec::term(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  if (tail_ == Tail::repeat_last) return prefix_.back();
  return {};
}

std::vector<Rational> SequenceSpec::terms(std::size_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(term(n));
  return out;
}

Tail parse_tail(const std::string& text) {
  if (text == "zero") return Tail::zero;
  if (text == "repeat" || text == "repeat_last") return Tail::repeat_last;
  throw ArgumentError("unknown tail '" + text + "' (expected zero or repeat)");
}

std::string to_string(Tail tail) { return tail == Tail::zero ? "zero" : "repeat"; }

Matrix toeplitz_window(const SequenceSpec& s, std::size_t n) {
  const auto a = s.terms(n);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = a[i - j];
  return m;
}

namespace {

void require_nonnegative(std::span<const Rational> seq) {
  for (const auto& x : seq) {
    if (x.sign() < 0) throw DomainError("sequence entries must be nonnegative, got " + x.to_string());
  }
}

template <typename Reject>
std::optional<PairViolation> first_violation(std::span<const Rational> seq, Reject reject) {
  require_nonnegative(seq);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    for (std::size_t j = i + 1; j + 1 < seq.size(); ++j) {
      if (reject(seq[i] * seq[j + 1], seq[i + 1] * seq[j])) return PairViolation{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace

// Both compare a_i a_{j+1} (outer) with a_{i+1} a_j (inner).
std::optional<PairViolation> find_log_concavity_violation(std::span<const Rational> seq) {
  return first_violation(seq, [](const Rational& outer, const Rational& inner) { return outer > inner; });
}

std::optional<PairViolation> find_log_convexity_violation(std::span<const Rational> seq) {
  return first_violation(seq, [](const Rational& outer, const Rational& inner) { return outer < inner; });
}

bool is_log_concave(std::span<const Rational> seq) { return !find_log_concavity_violation(seq); }

bool is_log_convex(std::span<const Rational> seq) { return !find_log_convexity_violation(seq); }

PFVerdict is_pf_finite(std::span<const Rational> seq) {
  require_nonnegative(seq);
  std::size_t low = 0;
  while (low < seq.size() && seq[low].is_zero()) ++low;
  if (low == seq.size()) throw DomainError("PF test of an all-zero sequence");

  const Polynomial poly(std::vector<Rational>(seq.begin() + static_cast<std::ptrdiff_t>(low), seq.end()));
  const Polynomial reduced = squarefree_part(poly);
  const std::size_t real = count_distinct_real_roots(reduced);

  PFVerdict verdict;
  verdict.holds = static_cast<long>(real) == reduced.degree();
  if (!verdict.holds) verdict.roots = RootCountWitness{reduced.degree(), real};
  return verdict;
}

PFVerdict is_pf_r_window(const SequenceSpec& s, std::size_t r, std::size_t window) {
  if (r == 0) throw ArgumentError("PF order must be at least 1");
  if (window < r) throw ArgumentError("window " + std::to_string(window) + " smaller than order " + std::to_string(r));
  const auto report = tp::is_tp_r(toeplitz_window(s, window), tp::Order::of(r));
  PFVerdict verdict;
  verdict.holds = report.holds;
  verdict.window = window;
  verdict.minor = report.witness;
  return verdict;
}

}  // namespace rtp::seq
