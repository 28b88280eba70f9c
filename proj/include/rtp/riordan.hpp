#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rtp/matrix.hpp"
#include "rtp/rational.hpp"
#include "rtp/sequences.hpp"

namespace rtp::riordan {

/// Rows 0..n_rows-1 of a lower-triangular array; entry (n, k) for k > n is zero.
class Triangle {
 public:
  Triangle() = default;
  /// Row n must hold exactly n + 1 entries and r_{0,0} must be 1;
  /// otherwise ArgumentError.
  explicit Triangle(std::vector<std::vector<Rational>> rows);

  std::size_t n_rows() const noexcept { return rows_.size(); }
  /// Zero outside 0 <= k <= n.
  Rational at(std::size_t n, std::size_t k) const;
  std::span<const Rational> row(std::size_t n) const { return rows_.at(n); }
  std::vector<Rational> column(std::size_t k) const;
  /// Leading n x n block as a dense matrix (n <= n_rows()).
  Matrix window(std::size_t n) const;
  Matrix to_matrix() const { return window(n_rows()); }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// A- and Z-sequences. Throws PropernessError when a_0 = 0.
struct RiordanSpec {
  RiordanSpec(seq::SequenceSpec a, seq::SequenceSpec z);

  seq::SequenceSpec a_seq;
  seq::SequenceSpec z_seq;

  friend bool operator==(const RiordanSpec&, const RiordanSpec&) = default;
};

/// R(a,b;s,t). Throws DomainError on a negative parameter.
struct RecursiveMatrixParams {
  RecursiveMatrixParams(Rational a, Rational b, Rational s, Rational t);

  Rational a;
  Rational b;
  Rational s;
  Rational t;

  /// Z = (a, b, 0, ...), A = (1, s, t, 0, ...).
  RiordanSpec to_spec() const;
};

/// Truncated power series (g, f). Throws PropernessError unless
/// g[0] == 1 and f[0] != 0.
struct SeriesPair {
  SeriesPair(std::vector<Rational> g, std::vector<Rational> f);

  std::vector<Rational> g;
  std::vector<Rational> f;
};

enum class NamedTriangle { pascal, catalan, motzkin, ballot, schroder_large, schroder_little };

/// Case-insensitive; accepts "schroder-large"/"large-schroder" style
/// spellings. Throws ArgumentError for unknown names.
NamedTriangle parse_named_triangle(const std::string& name);
std::string to_string(NamedTriangle name);
std::vector<NamedTriangle> all_named_triangles();

RiordanSpec named_triangle(NamedTriangle name);

/// r_{n+1,0} = sum_j z_j r_{n,j} and r_{n+1,k+1} = sum_j a_j r_{n,k+j},
/// sums truncated at the row boundary. Throws ArgumentError for n_rows == 0.
Triangle build_triangle(const RiordanSpec& spec, std::size_t n_rows);

/// n x n window of J(R): column 0 is z, columns j >= 1 are the shifted A-sequence.
Matrix coefficient_matrix(const RiordanSpec& spec, std::size_t n);

/// R(a,b;s,t) by its three-term recurrence.
Triangle build_recursive_matrix(const RecursiveMatrixParams& p, std::size_t n_rows);

/// C_0 .. C_{count-1}(a,b;s,t): column 0 of R(a,b;s,t).
std::vector<Rational> catalan_like_numbers(const RecursiveMatrixParams& p, std::size_t count);

/// Entry (n, k) is [x^n] x^k f(x)^k g(x). Throws ArgumentError when either
/// series has fewer than n_rows coefficients.
Triangle triangle_from_gf(const SeriesPair& series, std::size_t n_rows);

/// Leading A/Z terms recovered from a numeric triangle.
struct AZPrefixes {
  std::vector<Rational> z;
  std::vector<Rational> a;
};

/// Recovers the n_rows - 2 leading terms of Z and A and checks every entry
/// whose defining equation involves only those terms. Throws ArgumentError
/// for fewer than 3 rows, SingularityError for a zero diagonal entry, and
/// NotRiordanError at the first inconsistent entry.
AZPrefixes extract_az(const Triangle& t);

}  // namespace rtp::riordan
