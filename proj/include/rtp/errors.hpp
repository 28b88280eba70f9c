#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtp {

// Argument shapes that do not fit (non-square determinant, mismatched products).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad index sets, sizes, orders, or names.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Values outside the mathematical domain (negative sequence entries, zero polynomial).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// g(0) != 1, f(0) == 0, or a_0 == 0.
class PropernessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric triangle whose A/Z systems are inconsistent at entry (row, col).
class NotRiordanError : public std::runtime_error {
 public:
  NotRiordanError(std::size_t row, std::size_t col)
      : std::runtime_error("not a Riordan array: inconsistency at (" + std::to_string(row) + "," +
                           std::to_string(col) + ")"),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

// Full minor enumeration requested on a matrix above the configured cap.
class SizeLimitError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

}  // namespace rtp
