#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fermat/bigreal.hpp"
#include "fermat/gamma_kernel.hpp"
#include "fermat/index.hpp"

namespace fermat {

/// N(f) from the built-in conductor table (UnknownConductor otherwise).
long long conductor_norm(const FermatIndex& idx);

/// Lambda(s) = A^s Gamma(s)^g L(s) = epsilon Lambda(2 - s).
struct FunctionalEqData {
  int degree;  // 2g
  int g;
  BigInt d_n;
  long long conductor_norm;
  BigReal scale;  // A = sqrt(d_N N(f)) / (2 pi)^g
};

FunctionalEqData functional_eq_data(const FermatIndex& idx, unsigned prec,
                                    std::optional<long long> conductor_override = std::nullopt);

/// Lambda(s) = S1 + epsilon S2 with
///   S1 = t^s sum a_n G_s(n t / A),  S2 = t^{s-2} sum a_n G_{2-s}(n / (A t)).
struct LambdaSums {
  BigReal s1;
  BigReal s2;
  std::int64_t terms;  // largest n consulted
};

/// Number of coefficients lambda_at needs for (s, t).
std::int64_t required_terms(const FunctionalEqData& fe, const BigReal& s, const BigReal& t, unsigned prec);

/// Throws CoefficientShortfall when `coeffs` (a_0..a_X) is too short.
LambdaSums lambda_at(const FunctionalEqData& fe, const std::vector<std::int64_t>& coeffs, const BigReal& s,
                     const BigReal& t, unsigned prec);

struct LOptions {
  std::string cache_dir;
  unsigned threads = 1;
  std::optional<long long> conductor;
};

/// L(j_N^{a,b}, s) with coefficients fetched on demand.
class HeckeLFunction {
 public:
  HeckeLFunction(const FermatIndex& idx, unsigned prec, LOptions opt = {});

  const FunctionalEqData& data() const { return fe_; }
  const FermatIndex& index() const { return idx_; }

  LambdaSums lambda_at(const BigReal& s, const BigReal& t);

  /// From s0 = 3/2 and stretches 1, 6/5; EpsilonIndeterminate if the solved
  /// value is not within 1e-5 of +1 or -1.
  int solve_epsilon();
  /// Raw solved value before rounding (after solve_epsilon).
  const BigReal& epsilon_raw() const { return eps_raw_; }

  /// Lambda(s) with the solved root number and stretch t.
  BigReal lambda(const BigReal& s, const BigReal& t);

  /// L*(0) = epsilon d_N N(f) / (2 pi)^{2g} L(2) = epsilon Lambda(2).
  BigReal l_star_zero();

  std::int64_t coefficients_used() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

 private:
  void ensure_coefficients(std::int64_t x);

  FermatIndex idx_;
  unsigned prec_;
  LOptions opt_;
  FunctionalEqData fe_;
  std::vector<std::int64_t> coeffs_;
  int epsilon_ = 0;
  BigReal eps_raw_;
};

int solve_epsilon(const FermatIndex& idx, unsigned prec, const LOptions& opt = {});
BigReal l_star_zero(const FermatIndex& idx, unsigned prec, const LOptions& opt = {});

}  // namespace fermat
