#pragma once

#include <optional>

#include "fermat/bigreal.hpp"

namespace fermat {

/// First continued-fraction convergent p/q of x with q <= q_max and
/// |x - p/q| < tol whose successor is either far away in denominator
/// (> q_max / 10) or no better than tol. Returns nothing otherwise.
std::optional<Rational> rational_recognize(const BigReal& x, long long q_max, const BigReal& tol);

}  // namespace fermat
