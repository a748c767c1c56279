#include "fermat/rational_recognize.hpp"

#include <vector>

namespace fermat {

namespace {

// Convergents of x until the denominator passes `q_limit` or the expansion
// terminates at the working precision of x.
std::vector<Rational> convergents(const BigReal& x, long long q_limit) {
  const unsigned digits = x.precision();
  PrecisionGuard guard(digits + 5);
  const BigReal tiny = pow2_neg(static_cast<long>(digits_to_bits(digits)) - 16);
  std::vector<Rational> out;
  BigInt p_prev = 0, q_prev = 1, p = 1, q = 0;
  BigReal rest = x;
  for (int k = 0; k < 200; ++k) {
    const BigReal fl = boost::multiprecision::floor(rest);
    const BigInt a = fl.convert_to<BigInt>();
    const BigInt p_next = a * p + p_prev, q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    out.emplace_back(p, q);
    if (q > q_limit) break;
    const BigReal frac = rest - fl;
    if (frac < tiny * (boost::multiprecision::abs(rest) + 1)) break;
    rest = 1 / frac;
  }
  return out;
}

}  // namespace

std::optional<Rational> rational_recognize(const BigReal& x, long long q_max, const BigReal& tol) {
  const std::vector<Rational> cf = convergents(x, q_max);
  auto residual = [&](const Rational& r) -> BigReal { return boost::multiprecision::abs(x - from_rational(r)); };
  for (std::size_t k = 0; k < cf.size(); ++k) {
    if (denominator(cf[k]) > q_max) break;
    if (residual(cf[k]) >= tol) continue;
    if (k + 1 == cf.size()) return cf[k];  // expansion terminated
    const Rational& next = cf[k + 1];
    if (denominator(next) * 10 > q_max || residual(next) >= tol) return cf[k];
  }
  return std::nullopt;
}

}  // namespace fermat
