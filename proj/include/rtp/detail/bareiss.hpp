#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace rtp::detail {

// Determinant of the n x n integer matrix stored row-major in `a`. The
// buffer is consumed as scratch space.
mpz_class bareiss_determinant(std::vector<mpz_class>& a, std::size_t n);

}  // namespace rtp::detail
