#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rtp/matrix.hpp"
#include "rtp/minor_scan.hpp"
#include "rtp/rational.hpp"

namespace rtp::seq {

enum class Tail {
  zero,         // a_n = 0 past the prefix
  repeat_last,  // a_n = last prefix entry past the prefix
};

/// Finite description of an infinite nonnegative sequence.
class SequenceSpec {
 public:
  /// Throws DomainError on a negative entry, ArgumentError for an empty
  /// prefix with Tail::repeat_last.
  SequenceSpec(std::vector<Rational> prefix, Tail tail);

  static SequenceSpec zeros() { return SequenceSpec({}, Tail::zero); }

  std::span<const Rational> prefix() const noexcept { return prefix_; }
  Tail tail() const noexcept { return tail_; }

  Rational term(std::size_t n) const;
  /// term(0) .. term(count - 1).
  std::vector<Rational> terms(std::size_t count) const;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

 private:
  std::vector<Rational> prefix_;
  Tail tail_;
};

/// "zero" or "repeat"; throws ArgumentError otherwise.
Tail parse_tail(const std::string& text);
std::string to_string(Tail tail);

/// n x n lower-triangular Toeplitz block [a_{i-j}].
Matrix toeplitz_window(const SequenceSpec& s, std::size_t n);

/// Pairwise definitions over all i < j (not the adjacent-triple shortcut),
/// so internal zeros are handled. Throw DomainError on negative entries.
bool is_log_concave(std::span<const Rational> seq);
bool is_log_convex(std::span<const Rational> seq);

/// First (i, j), i < j, breaking the inequality; lexicographic order.
struct PairViolation {
  std::size_t i;
  std::size_t j;
};
std::optional<PairViolation> find_log_concavity_violation(std::span<const Rational> seq);
std::optional<PairViolation> find_log_convexity_violation(std::span<const Rational> seq);

/// Failure evidence from the exact root-count path.
struct RootCountWitness {
  long degree = 0;              // of the squarefree reduced generating polynomial
  std::size_t real_roots = 0;   // distinct real roots found
};

struct PFVerdict {
  bool holds = true;
  /// Toeplitz block size a windowed verdict was verified to; empty for
  /// the exact finite path.
  std::optional<std::size_t> window;
  std::optional<tp::MinorWitness> minor;
  std::optional<RootCountWitness> roots;
};

/// Exact PF test for a finite sequence: the generating polynomial, with its
/// x^m factor removed, must have only real zeros. Throws DomainError for a
/// negative entry or an all-zero sequence.
PFVerdict is_pf_finite(std::span<const Rational> seq);

/// PF_r certificate up to a window: every minor of order <= r of the
/// window x window Toeplitz block is nonnegative. A necessary condition
/// only. Throws ArgumentError when r == 0 or window < r.
PFVerdict is_pf_r_window(const SequenceSpec& s, std::size_t r, std::size_t window);

}  // namespace rtp::seq
