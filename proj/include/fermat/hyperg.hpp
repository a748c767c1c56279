#pragma once

#include "fermat/bigreal.hpp"

namespace fermat {

/// Precisions are in bits. Returned values carry at least that precision.

/// Gamma(x) for rational x > 0.
BigReal gamma_rat(const Rational& x, unsigned prec);

/// B(alpha, beta) = Gamma(alpha) Gamma(beta) / Gamma(alpha + beta).
BigReal beta(const Rational& alpha, const Rational& beta, unsigned prec);

/// 3F2(alpha, beta, s-1; s, s; 1) with s = alpha + beta, alpha, beta in (0, 1).
/// Direct summation to a cutoff M plus an asymptotic tail: the terms behave
/// like C sum_k c_k n^{-k-2}, and each power sum is a Hurwitz zeta value.
BigReal f3f2_at1(const Rational& alpha, const Rational& beta, unsigned prec);

/// B(alpha, beta)^2 * 3F2(...; 1).
BigReal f_tilde(const Rational& alpha, const Rational& beta, unsigned prec);

/// F_N^{a,b} = F~(<a>/N, <b>/N) - F~(<-a>/N, <-b>/N).
BigReal f_val(int n, long long a, long long b, unsigned prec);

/// Hurwitz zeta(s, m) for integers s >= 2, m >= 1.
BigReal hurwitz_zeta_int(unsigned s, long long m, unsigned prec);

}  // namespace fermat
