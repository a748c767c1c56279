#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>

namespace fermat {

/// Arbitrary-precision real. The MPFR backend records its own precision;
/// results of arithmetic carry the larger of the operand precisions.
using BigReal = boost::multiprecision::mpfr_float;
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<long long>;
using IntVector = VectorX<long long>;

inline unsigned digits_to_bits(unsigned digits) {
  return static_cast<unsigned>(digits * 3.3219280948873623) + 1;
}

/// Sets the default BigReal precision (decimal digits) for the lifetime of
/// the guard. Nested guards restore the previous value. The default is
/// process-wide, so BigReal work is confined to one thread at a time.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits)
      : saved_(BigReal::default_precision()) {
    BigReal::default_precision(digits);
  }
  ~PrecisionGuard() { BigReal::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// pi at the current default precision.
BigReal big_pi();

/// 2^-bits at the current default precision.
BigReal pow2_neg(long bits);

BigReal from_rational(const Rational& q);

/// Fixed-point rendering with `digits` significant digits.
std::string to_string(const BigReal& x, int digits);

struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() : re(0), im(0) {}
  BigComplex(BigReal r) : re(std::move(r)), im(0) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) {
    BigReal r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
};

inline BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
inline BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
inline BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
BigComplex operator/(const BigComplex& a, const BigComplex& b);

inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
inline BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
BigReal abs(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
/// e^{i theta}
BigComplex expi(const BigReal& theta);

/// log Gamma(z) for Re z > 0, up to a multiple of 2 pi i (callers exponentiate).
BigComplex lgamma_complex(const BigComplex& z);

}  // namespace fermat
