#include "rtp/minor_scan.hpp"

#include <algorithm>
#include <numeric>

#include "rtp/detail/bareiss.hpp"
#include "rtp/errors.hpp"

namespace rtp::tp {

Order Order::of(std::size_t r) {
  if (r == 0) throw ArgumentError("minor order must be at least 1");
  return Order(r);
}

Order Order::parse(const std::string& text) {
  if (text == "all" || text == "ALL") return all();
  std::size_t consumed = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &consumed);
  } catch (const std::exception&) {
    throw ArgumentError("bad order '" + text + "'");
  }
  if (consumed != text.size() || text.front() == '-') throw ArgumentError("bad order '" + text + "'");
  return of(value);
}

std::size_t Order::effective(std::size_t rows, std::size_t cols) const {
  const std::size_t side = std::min(rows, cols);
  return is_all() ? side : std::min(r_, side);
}

std::string Order::to_string() const { return is_all() ? "all" : std::to_string(r_); }

namespace {

// Advances `idx` to the next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Row i scaled by the lcm of its denominators. Positive row scaling keeps
// every minor's sign, so the scan runs on integers and only the witness is
// re-evaluated over the rationals.
std::vector<mpz_class> integer_rows(const Matrix& m) {
  std::vector<mpz_class> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class row_lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i * m.cols() + j] = m(i, j).numerator() * (row_lcm / m(i, j).denominator());
  }
  return out;
}

}  // namespace

TPReport is_tp_r(const Matrix& m, Order order, const ScanOptions& options) {
  TPReport report;
  report.order = order;
  report.window_rows = m.rows();
  report.window_cols = m.cols();
  if (m.empty()) return report;
  if (order.is_all() && !options.force && std::max(m.rows(), m.cols()) > options.size_cap) {
    throw SizeLimitError("full minor enumeration on " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " exceeds the size cap of " + std::to_string(options.size_cap) + " (use force)");
  }

  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::vector<mpz_class> ints = integer_rows(m);
  std::vector<mpz_class> scratch;
  const std::size_t max_order = order.effective(rows, cols);

  for (std::size_t k = 1; k <= max_order; ++k) {
    std::vector<std::size_t> row_idx(k);
    std::iota(row_idx.begin(), row_idx.end(), 0);
    do {
      std::vector<std::size_t> col_idx(k);
      std::iota(col_idx.begin(), col_idx.end(), 0);
      do {
        scratch.resize(k * k);
        bool zero_row = false;
        for (std::size_t i = 0; i < k && !zero_row; ++i) {
          bool any = false;
          for (std::size_t j = 0; j < k; ++j) {
            scratch[i * k + j] = ints[row_idx[i] * cols + col_idx[j]];
            any = any || scratch[i * k + j] != 0;
          }
          zero_row = !any;
        }
        if (zero_row) continue;
        if (sgn(detail::bareiss_determinant(scratch, k)) < 0) {
          report.holds = false;
          report.witness = MinorWitness{row_idx, col_idx, minor(m, row_idx, col_idx)};
          return report;
        }
      } while (next_subset(col_idx, cols));
    } while (next_subset(row_idx, rows));
  }
  return report;
}

}  // namespace rtp::tp
