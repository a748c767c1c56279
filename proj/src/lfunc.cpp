#include "fermat/lfunc.hpp"

#include <cmath>
#include <stdexcept>

#include "fermat/coeff_cache.hpp"
#include "fermat/cyclo.hpp"
#include "fermat/errors.hpp"
#include "fermat/jacobi.hpp"

namespace fermat {

namespace {

unsigned bits_to_digits(unsigned bits) { return static_cast<unsigned>(bits / 3.3219280948873623) + 2; }
constexpr unsigned kGuardBits = 32;

// Smallest y on a geometric grid with |G(y)| * (A y + 1)^2 below 2^-prec.
BigReal cutoff_argument(const GammaKernel& kernel, const BigReal& a_scale, unsigned prec) {
  const BigReal eps = pow2_neg(static_cast<long>(prec) + 8);
  BigReal y(0.5);
  for (int i = 0; i < 400; ++i) {
    const BigReal n = a_scale * y + 1;
    if (boost::multiprecision::abs(kernel.real(y)) * n * n < eps) return y;
    y *= BigReal(1.25);
  }
  throw std::logic_error("cutoff_argument: kernel does not decay");
}

// Generous upper bound on the arguments the sums will need, used to fix the
// quadrature step before the exact cutoff is known.
BigReal argument_bound(int g, unsigned prec) {
  // G(y) ~ exp(-g y^{1/g}); solve g y^{1/g} = prec ln 2 with margin.
  const double target = (prec + 64) * std::log(2.0) / g + 8.0;
  return BigReal(std::pow(target, g));
}

struct SumPlan {
  GammaKernel k1;  // G_s
  GammaKernel k2;  // G_{2-s}
  std::int64_t n1;
  std::int64_t n2;
};

SumPlan plan_sums(const FunctionalEqData& fe, const BigReal& s, const BigReal& t, unsigned prec) {
  const BigReal bound = argument_bound(fe.g, prec);
  // The cutoff weighs |G(y)| by n^2 with n ~ A y, so the kernels carry the
  // extra bits that weighting needs across the whole range.
  const double spread = std::log2((fe.scale * boost::multiprecision::max(t, 1 / t) * bound + 1).convert_to<double>());
  const unsigned kernel_prec = prec + static_cast<unsigned>(std::ceil(2 * spread)) + 8;
  GammaKernel k1(BigComplex(s), fe.g, kernel_prec, bound);
  GammaKernel k2(BigComplex(BigReal(2 - s)), fe.g, kernel_prec, bound);
  const BigReal y1 = cutoff_argument(k1, fe.scale, prec);
  const BigReal y2 = cutoff_argument(k2, fe.scale, prec);
  // n t / A <= y1 and n / (A t) <= y2
  const auto n1 = static_cast<std::int64_t>(boost::multiprecision::ceil(y1 * fe.scale / t).convert_to<double>());
  const auto n2 = static_cast<std::int64_t>(boost::multiprecision::ceil(y2 * fe.scale * t).convert_to<double>());
  return {std::move(k1), std::move(k2), std::max<std::int64_t>(n1, 1), std::max<std::int64_t>(n2, 1)};
}

}  // namespace

long long conductor_norm(const FermatIndex& idx) {
  const CharacterEntry* entry = find_character_entry(idx);
  if (entry == nullptr) throw UnknownConductor("no conductor data for " + idx.to_string());
  return entry->conductor_norm;
}

FunctionalEqData functional_eq_data(const FermatIndex& idx, unsigned prec, std::optional<long long> conductor_override) {
  PrecisionGuard guard(bits_to_digits(prec + kGuardBits));
  FunctionalEqData fe;
  fe.g = idx.g();
  fe.degree = 2 * fe.g;
  fe.d_n = disc_abs(idx.N());
  fe.conductor_norm = conductor_override ? *conductor_override : conductor_norm(idx);
  if (fe.conductor_norm <= 0) throw std::invalid_argument("conductor norm must be positive");
  const BigReal q = BigReal(fe.d_n) * fe.conductor_norm;
  fe.scale = boost::multiprecision::sqrt(q) / boost::multiprecision::pow(2 * big_pi(), fe.g);
  return fe;
}

std::int64_t required_terms(const FunctionalEqData& fe, const BigReal& s, const BigReal& t, unsigned prec) {
  PrecisionGuard guard(bits_to_digits(prec + kGuardBits));
  const SumPlan plan = plan_sums(fe, s, t, prec);
  return std::max(plan.n1, plan.n2);
}

LambdaSums lambda_at(const FunctionalEqData& fe, const std::vector<std::int64_t>& coeffs, const BigReal& s,
                     const BigReal& t, unsigned prec) {
  if (t <= 0) throw std::invalid_argument("lambda_at: t must be positive");
  PrecisionGuard guard(bits_to_digits(prec + kGuardBits));
  const SumPlan plan = plan_sums(fe, s, t, prec);
  const std::int64_t need = std::max(plan.n1, plan.n2);
  if (static_cast<std::int64_t>(coeffs.size()) <= need)
    throw CoefficientShortfall("lambda_at: need coefficients up to " + std::to_string(need), need);

  const BigReal a_scale = fe.scale;
  BigReal sum1 = 0, sum2 = 0;
  for (std::int64_t n = 1; n <= plan.n1; ++n) {
    const std::int64_t an = coeffs[static_cast<std::size_t>(n)];
    if (an != 0) sum1 += BigReal(an) * plan.k1.real(n * t / a_scale);
  }
  for (std::int64_t n = 1; n <= plan.n2; ++n) {
    const std::int64_t an = coeffs[static_cast<std::size_t>(n)];
    if (an != 0) sum2 += BigReal(an) * plan.k2.real(n / (a_scale * t));
  }
  LambdaSums out;
  out.s1 = boost::multiprecision::pow(t, s) * sum1;
  out.s2 = boost::multiprecision::pow(t, s - 2) * sum2;
  out.terms = need;
  return out;
}

HeckeLFunction::HeckeLFunction(const FermatIndex& idx, unsigned prec, LOptions opt)
    : idx_(idx), prec_(prec), opt_(std::move(opt)), fe_(functional_eq_data(idx, prec, opt_.conductor)) {}

void HeckeLFunction::ensure_coefficients(std::int64_t x) {
  if (static_cast<std::int64_t>(coeffs_.size()) > x) return;
  coeffs_ = cached_dirichlet_coeffs(opt_.cache_dir, idx_, x, opt_.threads);
}

LambdaSums HeckeLFunction::lambda_at(const BigReal& s, const BigReal& t) {
  PrecisionGuard guard(bits_to_digits(prec_ + kGuardBits));
  for (int attempt = 0; attempt < 3; ++attempt) {
    try {
      return fermat::lambda_at(fe_, coeffs_, s, t, prec_);
    } catch (const CoefficientShortfall& e) {
      ensure_coefficients(e.required() + e.required() / 8 + 16);
    }
  }
  return fermat::lambda_at(fe_, coeffs_, s, t, prec_);
}

int HeckeLFunction::solve_epsilon() {
  if (epsilon_ != 0) return epsilon_;
  PrecisionGuard guard(bits_to_digits(prec_ + kGuardBits));
  const BigReal s0(1.5);
  const BigReal t1(1), t2 = BigReal(6) / 5;
  const LambdaSums a = lambda_at(s0, t1);
  const LambdaSums b = lambda_at(s0, t2);
  const BigReal denom = a.s2 - b.s2;
  const BigReal scale = boost::multiprecision::abs(a.s2) + boost::multiprecision::abs(b.s2);
  if (boost::multiprecision::abs(denom) <= scale * BigReal(1e-8))
    throw EpsilonIndeterminate("root number system is singular for " + idx_.to_string());
  eps_raw_ = (b.s1 - a.s1) / denom;
  const int rounded = eps_raw_ > 0 ? 1 : -1;
  if (boost::multiprecision::abs(eps_raw_ - rounded) > BigReal(1e-5))
    throw EpsilonIndeterminate("solved root number " + to_string(eps_raw_, 12) + " is not +-1 for " +
                               idx_.to_string());
  epsilon_ = rounded;
  return epsilon_;
}

BigReal HeckeLFunction::lambda(const BigReal& s, const BigReal& t) {
  const int eps = solve_epsilon();
  PrecisionGuard guard(bits_to_digits(prec_ + kGuardBits));
  const LambdaSums sums = lambda_at(s, t);
  return eps > 0 ? BigReal(sums.s1 + sums.s2) : BigReal(sums.s1 - sums.s2);
}

BigReal HeckeLFunction::l_star_zero() {
  const int eps = solve_epsilon();
  PrecisionGuard guard(bits_to_digits(prec_ + kGuardBits));
  return eps * lambda(BigReal(2), BigReal(1));
}

int solve_epsilon(const FermatIndex& idx, unsigned prec, const LOptions& opt) {
  return HeckeLFunction(idx, prec, opt).solve_epsilon();
}

BigReal l_star_zero(const FermatIndex& idx, unsigned prec, const LOptions& opt) {
  return HeckeLFunction(idx, prec, opt).l_star_zero();
}

}  // namespace fermat
