#include "fermat/gamma_kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

unsigned bits_to_digits(unsigned bits) { return static_cast<unsigned>(bits / 3.3219280948873623) + 2; }
constexpr unsigned kGuardBits = 48;

BigComplex weight(const BigComplex& z, const BigComplex& s, int g) {
  BigComplex lg = lgamma_complex(z);
  lg.re *= g;
  lg.im *= g;
  return exp(lg) / (z - s);
}

}  // namespace

GammaKernel::GammaKernel(const BigComplex& s, int g, unsigned prec, const BigReal& y_max,
                         std::optional<BigReal> contour, unsigned refine)
    : s_(s), g_(g), prec_(prec) {
  if (g < 1) throw std::invalid_argument("GammaKernel: g must be positive");
  PrecisionGuard guard(bits_to_digits(prec + kGuardBits));
  s_ = BigComplex(BigReal(s.re), BigReal(s.im));
  real_s_ = s.im == 0;
  const BigReal zero(0);
  c_ = contour ? BigReal(*contour) : BigReal(boost::multiprecision::max(s_.re, zero) + 1);
  if (boost::multiprecision::abs(c_ - s_.re) < BigReal(0.25) || c_ <= 0)
    throw ContourTooClose("GammaKernel: contour too close to a pole");

  // Trapezoid error ~ exp(-2 pi d / h) y^d for a strip of half-width d free of poles.
  const BigReal d = BigReal(0.9) * boost::multiprecision::min(BigReal(c_ - s_.re), c_);
  const BigReal log_inv_eps = (prec + 16) * boost::multiprecision::log(BigReal(2));
  const BigReal log_y = boost::multiprecision::max(BigReal(boost::multiprecision::log(y_max)), zero);
  h_ = 2 * big_pi() * d / (log_inv_eps + d * log_y) / std::max(refine, 1u);

  const BigReal rel_eps = pow2_neg(static_cast<long>(prec) + 24);
  BigReal wmax = 0;
  for (long k = 0;; ++k) {
    const BigComplex z(c_, h_ * k);
    const BigComplex w = weight(z, s_, g_);
    const BigReal mag = abs(w);
    if (mag > wmax) wmax = mag;
    weights_.push_back(w);
    if (!real_s_ && k > 0) neg_weights_.push_back(weight(BigComplex(c_, -h_ * k), s_, g_));
    if (h_ * k > 4 && mag < rel_eps * wmax) {
      if (real_s_ || abs(neg_weights_.back()) < rel_eps * wmax) break;
    }
    if (k > 2000000) throw std::logic_error("GammaKernel: weights do not decay");
  }
}

BigComplex GammaKernel::operator()(const BigReal& y) const {
  if (y <= 0) throw std::invalid_argument("GammaKernel: y must be positive");
  PrecisionGuard guard(bits_to_digits(prec_ + kGuardBits));
  const BigReal log_y = boost::multiprecision::log(y);
  // e^{-i k h log y} by repeated rotation
  const BigComplex rot = expi(-h_ * log_y);
  BigComplex cur(BigReal(1));
  BigComplex acc = weights_[0];
  BigComplex neg_acc;
  for (std::size_t k = 1; k < weights_.size(); ++k) {
    cur *= rot;
    acc += weights_[k] * cur;
    if (!real_s_) neg_acc += neg_weights_[k - 1] * conj(cur);
  }
  if (real_s_) {
    // w_{-k} = conj(w_k): the pair sums to 2 Re(w_k e^{-ikhL})
    acc = BigComplex(2 * acc.re - weights_[0].re, BigReal(0));
  } else {
    acc += neg_acc;
  }
  const BigReal scale = h_ / (2 * big_pi()) * boost::multiprecision::exp(-c_ * log_y);
  return {acc.re * scale, acc.im * scale};
}

BigReal GammaKernel::real(const BigReal& y) const { return (*this)(y).re; }

BigComplex kernel_G(const BigComplex& s, const BigReal& y, int g, unsigned prec) {
  return GammaKernel(s, g, prec, y)(y);
}

}  // namespace fermat
