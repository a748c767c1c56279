#pragma once

#include <optional>
#include <vector>

#include "fermat/bigreal.hpp"

namespace fermat {

/// G_s(y) = (1 / 2 pi i) int_{(c)} Gamma(z)^g y^{-z} / (z - s) dz by the
/// trapezoid rule on Re z = c. Weights Gamma(z_k)^g / (z_k - s) are computed
/// once; each evaluation is a sum of rotated weights.
class GammaKernel {
 public:
  /// `y_max` bounds the arguments that will be passed; it fixes the step.
  /// Default contour: c = max(Re s, 0) + 1. `refine` divides the chosen step.
  GammaKernel(const BigComplex& s, int g, unsigned prec, const BigReal& y_max,
              std::optional<BigReal> contour = std::nullopt, unsigned refine = 1);

  BigComplex operator()(const BigReal& y) const;
  /// Real part; exact for real s.
  BigReal real(const BigReal& y) const;

  const BigReal& contour() const { return c_; }
  const BigReal& step() const { return h_; }
  std::size_t nodes() const { return weights_.size(); }

 private:
  BigComplex s_;
  int g_;
  unsigned prec_;
  bool real_s_;
  BigReal c_;
  BigReal h_;
  // weights_[k] for k >= 0; negative k follow from conjugate symmetry
  // when s is real, otherwise neg_weights_[k-1] holds w_{-k}.
  std::vector<BigComplex> weights_;
  std::vector<BigComplex> neg_weights_;
};

/// One-shot evaluation with a kernel built for this y.
BigComplex kernel_G(const BigComplex& s, const BigReal& y, int g, unsigned prec);

}  // namespace fermat
