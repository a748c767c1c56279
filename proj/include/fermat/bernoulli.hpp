#pragma once

#include "fermat/bigreal.hpp"

namespace fermat {

/// Exact Bernoulli number B_n (B_1 = -1/2). Thread-safe, memoized.
Rational bernoulli_number(unsigned n);

/// Exact Bernoulli polynomial B_n(x) at a rational point.
Rational bernoulli_poly(unsigned n, const Rational& x);

}  // namespace fermat
