#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rtp/matrix.hpp"
#include "rtp/rational.hpp"

namespace rtp::tp {

/// Minor order to test: a fixed r, or every order up to min(rows, cols).
class Order {
 public:
  static Order all() { return Order(0); }
  /// Throws ArgumentError for r == 0.
  static Order of(std::size_t r);
  /// "all" or a positive integer.
  static Order parse(const std::string& text);

  bool is_all() const noexcept { return r_ == 0; }
  std::size_t value() const noexcept { return r_; }
  /// Largest order actually enumerated on a rows x cols matrix.
  std::size_t effective(std::size_t rows, std::size_t cols) const;
  std::string to_string() const;

  friend bool operator==(const Order&, const Order&) = default;

 private:
  explicit Order(std::size_t r) : r_(r) {}
  std::size_t r_;
};

struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rational value;
};

/// Verdict of a TP_r scan over a finite window.
struct TPReport {
  bool holds = true;
  Order order = Order::all();
  std::size_t window_rows = 0;
  std::size_t window_cols = 0;
  std::optional<MinorWitness> witness;  // present iff !holds; value < 0
};

struct ScanOptions {
  std::size_t size_cap = 12;  // applies to Order::all() only
  bool force = false;
};

/// Enumerates square minors by increasing order, then lexicographic row
/// set, then lexicographic column set, stopping at the first negative one.
/// Throws SizeLimitError for Order::all() on a matrix with a side above
/// options.size_cap unless options.force is set.
TPReport is_tp_r(const Matrix& m, Order order, const ScanOptions& options = {});

}  // namespace rtp::tp
