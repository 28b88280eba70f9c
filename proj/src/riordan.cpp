#include "rtp/riordan.hpp"

#include <algorithm>
#include <cctype>

#include "rtp/errors.hpp"

namespace rtp::riordan {

using seq::SequenceSpec;
using seq::Tail;

Triangle::Triangle(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) {
      throw ArgumentError("triangle row " + std::to_string(n) + " has " + std::to_string(rows_[n].size()) +
                          " entries, expected " + std::to_string(n + 1));
    }
  }
  if (!rows_.empty() && rows_[0][0] != Rational(1)) throw ArgumentError("triangle must have r_{0,0} = 1");
}

Rational Triangle::at(std::size_t n, std::size_t k) const {
  if (n >= rows_.size() || k > n) return {};
  return rows_[n][k];
}

std::vector<Rational> Triangle::column(std::size_t k) const {
  std::vector<Rational> out;
  for (std::size_t n = k; n < rows_.size(); ++n) out.push_back(rows_[n][k]);
  return out;
}

Matrix Triangle::window(std::size_t n) const {
  if (n > rows_.size()) throw DimensionError("window larger than triangle");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = rows_[i][j];
  return m;
}

RiordanSpec::RiordanSpec(SequenceSpec a, SequenceSpec z) : a_seq(std::move(a)), z_seq(std::move(z)) {
  if (a_seq.term(0).is_zero()) throw PropernessError("A-sequence must have a_0 != 0");
}

RecursiveMatrixParams::RecursiveMatrixParams(Rational a_, Rational b_, Rational s_, Rational t_)
    : a(std::move(a_)), b(std::move(b_)), s(std::move(s_)), t(std::move(t_)) {
  for (const Rational* x : {&a, &b, &s, &t}) {
    if (x->sign() < 0) throw DomainError("recursive-matrix parameters must be nonnegative");
  }
}

RiordanSpec RecursiveMatrixParams::to_spec() const {
  return RiordanSpec(SequenceSpec({Rational(1), s, t}, Tail::zero), SequenceSpec({a, b}, Tail::zero));
}

SeriesPair::SeriesPair(std::vector<Rational> g_, std::vector<Rational> f_) : g(std::move(g_)), f(std::move(f_)) {
  if (g.empty() || g[0] != Rational(1)) throw PropernessError("g(0) must equal 1");
  if (f.empty() || f[0].is_zero()) throw PropernessError("f(0) must be nonzero");
}

namespace {

std::string normalize_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

SequenceSpec zero_tail(std::initializer_list<long> xs) {
  std::vector<Rational> v(xs.begin(), xs.end());
  return SequenceSpec(std::move(v), Tail::zero);
}

SequenceSpec repeat_tail(std::initializer_list<long> xs) {
  std::vector<Rational> v(xs.begin(), xs.end());
  return SequenceSpec(std::move(v), Tail::repeat_last);
}

}  // namespace

NamedTriangle parse_named_triangle(const std::string& name) {
  const std::string key = normalize_name(name);
  if (key == "pascal") return NamedTriangle::pascal;
  if (key == "catalan") return NamedTriangle::catalan;
  if (key == "motzkin") return NamedTriangle::motzkin;
  if (key == "ballot") return NamedTriangle::ballot;
  if (key == "schroderlarge" || key == "largeschroder") return NamedTriangle::schroder_large;
  if (key == "schroderlittle" || key == "littleschroder") return NamedTriangle::schroder_little;
  throw ArgumentError("unknown triangle name '" + name + "'");
}

std::string to_string(NamedTriangle name) {
  switch (name) {
    case NamedTriangle::pascal: return "pascal";
    case NamedTriangle::catalan: return "catalan";
    case NamedTriangle::motzkin: return "motzkin";
    case NamedTriangle::ballot: return "ballot";
    case NamedTriangle::schroder_large: return "schroder-large";
    case NamedTriangle::schroder_little: return "schroder-little";
  }
  throw ArgumentError("unknown triangle");
}

std::vector<NamedTriangle> all_named_triangles() {
  return {NamedTriangle::pascal, NamedTriangle::catalan, NamedTriangle::motzkin,
          NamedTriangle::ballot, NamedTriangle::schroder_large, NamedTriangle::schroder_little};
}

RiordanSpec named_triangle(NamedTriangle name) {
  switch (name) {
    case NamedTriangle::pascal: return RiordanSpec(zero_tail({1, 1}), zero_tail({1}));
    case NamedTriangle::catalan: return RiordanSpec(zero_tail({1, 2, 1}), zero_tail({2, 1}));
    case NamedTriangle::motzkin: return RiordanSpec(zero_tail({1, 1, 1}), zero_tail({1, 1}));
    case NamedTriangle::ballot: return RiordanSpec(repeat_tail({1}), repeat_tail({1}));
    case NamedTriangle::schroder_large: return RiordanSpec(repeat_tail({1, 2}), repeat_tail({2}));
    case NamedTriangle::schroder_little: return RiordanSpec(repeat_tail({1, 2}), repeat_tail({1, 2}));
  }
  throw ArgumentError("unknown triangle");
}

Triangle build_triangle(const RiordanSpec& spec, std::size_t n_rows) {
  if (n_rows == 0) throw ArgumentError("triangle needs at least one row");
  const auto a = spec.a_seq.terms(n_rows);
  const auto z = spec.z_seq.terms(n_rows);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(n_rows);
  rows.push_back({Rational(1)});
  for (std::size_t n = 0; n + 1 < n_rows; ++n) {
    const auto& prev = rows[n];
    std::vector<Rational> next(n + 2);
    for (std::size_t j = 0; j <= n; ++j) next[0] += z[j] * prev[j];
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t j = 0; k + j <= n; ++j) next[k + 1] += a[j] * prev[k + j];
    }
    rows.push_back(std::move(next));
  }
  return Triangle(std::move(rows));
}

Matrix coefficient_matrix(const RiordanSpec& spec, std::size_t n) {
  const auto a = spec.a_seq.terms(n);
  const auto z = spec.z_seq.terms(n);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, 0) = z[i];
    for (std::size_t j = 1; j <= std::min(i + 1, n - 1); ++j) m(i, j) = a[i + 1 - j];
  }
  return m;
}

Triangle build_recursive_matrix(const RecursiveMatrixParams& p, std::size_t n_rows) {
  if (n_rows == 0) throw ArgumentError("triangle needs at least one row");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(n_rows);
  rows.push_back({Rational(1)});
  for (std::size_t n = 0; n + 1 < n_rows; ++n) {
    const auto& prev = rows[n];
    auto r = [&](std::size_t k) { return k <= n ? prev[k] : Rational(); };
    std::vector<Rational> next(n + 2);
    next[0] = p.a * r(0) + p.b * r(1);
    for (std::size_t k = 1; k <= n + 1; ++k) next[k] = r(k - 1) + p.s * r(k) + p.t * r(k + 1);
    rows.push_back(std::move(next));
  }
  return Triangle(std::move(rows));
}

std::vector<Rational> catalan_like_numbers(const RecursiveMatrixParams& p, std::size_t count) {
  if (count == 0) throw ArgumentError("count must be at least 1");
  return build_recursive_matrix(p, count).column(0);
}

Triangle triangle_from_gf(const SeriesPair& series, std::size_t n_rows) {
  if (n_rows == 0) throw ArgumentError("triangle needs at least one row");
  if (series.g.size() < n_rows || series.f.size() < n_rows) {
    throw ArgumentError("series must carry at least " + std::to_string(n_rows) + " coefficients");
  }
  // column holds the truncated series f^k g.
  std::vector<Rational> column(series.g.begin(), series.g.begin() + static_cast<std::ptrdiff_t>(n_rows));
  std::vector<std::vector<Rational>> rows(n_rows);
  for (std::size_t n = 0; n < n_rows; ++n) rows[n].resize(n + 1);
  for (std::size_t k = 0; k < n_rows; ++k) {
    for (std::size_t n = k; n < n_rows; ++n) rows[n][k] = column[n - k];
    std::vector<Rational> next(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (column[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n_rows; ++j) next[i + j] += column[i] * series.f[j];
    }
    column = std::move(next);
  }
  return Triangle(std::move(rows));
}

AZPrefixes extract_az(const Triangle& t) {
  const std::size_t n_rows = t.n_rows();
  if (n_rows < 3) throw ArgumentError("extract_az needs at least 3 rows");
  for (std::size_t n = 0; n < n_rows; ++n) {
    if (t.at(n, n).is_zero()) throw SingularityError("zero diagonal entry at row " + std::to_string(n));
  }
  const std::size_t m = n_rows - 2;
  AZPrefixes out;

  // Row n+1 against row n. The equation for r_{n+1,0} involves z_0..z_n and
  // the one for r_{n+1,k+1} involves a_0..a_{n-k}; the highest term always
  // multiplies r_{n,n}. An a-equation either introduces the next unknown
  // term (while fewer than m are known), is checked, or is undetermined.
  for (std::size_t n = 0; n + 1 < n_rows; ++n) {
    const Rational& pivot = t.at(n, n);

    // Each z-equation brings in a fresh z_n, so column 0 is never checked.
    if (n < m) {
      Rational acc;
      for (std::size_t j = 0; j < n; ++j) acc += out.z[j] * t.at(n, j);
      out.z.push_back((t.at(n + 1, 0) - acc) / pivot);
    }

    for (std::size_t k = n + 1; k-- > 0;) {
      const std::size_t top = n - k;
      const std::size_t col = k + 1;
      Rational acc;
      for (std::size_t j = 0; j < std::min(top, out.a.size()); ++j) acc += out.a[j] * t.at(n, k + j);
      if (top < out.a.size()) {
        if (acc + out.a[top] * pivot != t.at(n + 1, col)) throw NotRiordanError(n + 1, col);
      } else if (top == out.a.size() && top < m) {
        out.a.push_back((t.at(n + 1, col) - acc) / pivot);
      }
    }
  }
  return out;
}

}  // namespace rtp::riordan
