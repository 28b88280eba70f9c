#pragma once

// Exact scalar, matrix, and polynomial layer shared by every other module.

#include "rtp/errors.hpp"
#include "rtp/matrix.hpp"
#include "rtp/polynomial.hpp"
#include "rtp/rational.hpp"
