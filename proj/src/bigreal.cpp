#include "fermat/bigreal.hpp"

#include <mpfr.h>

#include <mutex>
#include <sstream>
#include <vector>

#include "fermat/bernoulli.hpp"

namespace fermat {

BigReal big_pi() {
  BigReal r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

BigReal pow2_neg(long bits) {
  BigReal r(1);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), -bits, MPFR_RNDN);
  return r;
}

BigReal from_rational(const Rational& q) { return BigReal(q); }

std::string to_string(const BigReal& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigReal d = norm(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigReal abs(const BigComplex& z) { return boost::multiprecision::hypot(z.re, z.im); }

BigComplex exp(const BigComplex& z) {
  BigReal m = boost::multiprecision::exp(z.re);
  return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

BigComplex log(const BigComplex& z) {
  return {boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.im, z.re)};
}

BigComplex expi(const BigReal& theta) {
  return {boost::multiprecision::cos(theta), boost::multiprecision::sin(theta)};
}

BigComplex lgamma_complex(const BigComplex& z) {
  const long bits = static_cast<long>(digits_to_bits(BigReal::default_precision()));
  // Stirling needs |w| large enough that the optimally truncated tail,
  // roughly exp(-2 pi |w|), drops below 2^-bits.
  const double radius = 0.12 * static_cast<double>(bits) + 8.0;
  long shift = 0;
  if (z.re < radius) shift = static_cast<long>(radius - z.re.convert_to<double>()) + 1;

  BigComplex w = z;
  BigComplex prod(BigReal(1));
  for (long j = 0; j < shift; ++j) {
    prod *= w;
    w.re += 1;
  }

  const BigReal half(0.5);
  BigComplex logw = log(w);
  BigComplex result = BigComplex(w.re - half, w.im) * logw - w;
  result.re += boost::multiprecision::log(2 * big_pi()) / 2;

  const BigComplex inv = BigComplex(BigReal(1)) / w;
  const BigComplex inv2 = inv * inv;
  BigComplex power = inv;
  const BigReal eps = pow2_neg(bits + 8);
  BigReal last = -1;
  for (unsigned k = 1; k < 400; ++k) {
    const Rational coeff = bernoulli_number(2 * k) / Rational((2 * k) * (2 * k - 1));
    BigComplex term = power * BigComplex(from_rational(coeff));
    const BigReal mag = abs(term);
    if (last >= 0 && mag > last) break;  // asymptotic series turned around
    result += term;
    if (mag < eps) break;
    last = mag;
    power *= inv2;
  }
  if (shift > 0) result -= log(prod);
  return result;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational>& bernoulli_table() {
  static std::vector<Rational> table{Rational(1)};
  return table;
}

Rational binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return Rational(r);
}

}  // namespace

Rational bernoulli_number(unsigned n) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  auto& table = bernoulli_table();
  while (table.size() <= n) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    const unsigned m = static_cast<unsigned>(table.size());
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      acc += binomial(m + 1, j) * table[j];
    }
    table.push_back(-acc / Rational(m + 1));
  }
  return table[n];
}

Rational bernoulli_poly(unsigned n, const Rational& x) {
  Rational acc = 0;
  Rational xp = 1;  // x^(n-j), built from j = n downwards
  for (unsigned j = n + 1; j-- > 0;) {
    const Rational b = bernoulli_number(j);
    if (b != 0) acc += binomial(n, j) * b * xp;
    xp *= x;
  }
  return acc;
}

}  // namespace fermat
