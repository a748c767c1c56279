#include "fermat/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "fermat/errors.hpp"
#include "fermat/lattice.hpp"
#include "fermat/lfunc.hpp"
#include "fermat/rational_recognize.hpp"
#include "fermat/regulator.hpp"

namespace fermat {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

const std::vector<TableRow>& table1_rows() {
  static const std::vector<TableRow> rows = {
      {3, 1, 1, Rational(18)},     {4, 1, 1, Rational(4)},      {4, 1, 2, Rational(8)},
      {6, 1, 1, Rational(-1)},     {6, 1, 2, Rational(6)},      {6, 1, 3, Rational(1)},
      {6, 1, 4, Rational(1)},      {6, 2, 3, Rational(2)},      {5, 1, 1, Rational(100)},
      {10, 1, 2, Rational(1, 2)},  {10, 1, 4, Rational(2)},     {10, 1, 6, Rational(1)},
      {10, 2, 5, Rational(4)},     {12, 1, 2, Rational(4, 3)},  {12, 1, 6, Rational(-8, 3)},
      {12, 2, 3, Rational(4, 3)},  {7, 1, 2, Rational(2744)},   {9, 1, 2, Rational(72)},
  };
  return rows;
}

std::optional<Rational> table1_expected(const FermatIndex& idx) {
  for (const auto& row : table1_rows())
    if (row.n == idx.N() && row.a == idx.a() && row.b == idx.b()) return row.expected;
  return std::nullopt;
}

CaseReport verify_case(const FermatIndex& idx, const RunConfig& cfg) {
  if (cfg.digits < 8) throw std::invalid_argument("verify_case: digits must be >= 8");
  if (!is_primitive(idx))
    throw std::invalid_argument(idx.to_string() + " is not primitive; it reduces to " +
                                reduce_nonprimitive(idx).to_string());
  const auto start = Clock::now();
  const unsigned reg_bits = digits_to_bits(cfg.digits + 10);
  const unsigned l_bits = digits_to_bits(cfg.digits + 8);
  const unsigned work_digits = cfg.digits + 12;

  // Fail fast on structural problems before any numerics.
  const std::vector<ElementDescriptor> elements = element_set(idx);
  const long long cond = cfg.conductor ? *cfg.conductor : conductor_norm(idx);

  PrecisionGuard guard(work_digits);
  CaseReport rep{idx, cfg.digits, h_set(idx), elements, {}, {}, {}, {}, {}, {}, std::nullopt, {}, 0, {}, cond, 0,
                 table1_expected(idx), {}};

  auto t0 = Clock::now();
  rep.r = r_value(idx, reg_bits);
  rep.d_n = d_const(idx.N(), reg_bits);
  rep.timings.regulator = seconds_since(t0);

  t0 = Clock::now();
  rep.d_ab = period_det(idx, reg_bits);
  rep.r_tilde = rep.d_ab / rep.d_n * rep.r;
  rep.timings.lattice = seconds_since(t0);

  t0 = Clock::now();
  LOptions lopt{cfg.cache_dir, cfg.threads, cond};
  HeckeLFunction lf(idx, l_bits, lopt);
  rep.l_star = lf.l_star_zero();
  rep.epsilon = lf.solve_epsilon();
  rep.epsilon_raw = lf.epsilon_raw();
  rep.coefficients = lf.coefficients_used();
  rep.timings.lfunction = seconds_since(t0);

  rep.ratio = rep.r_tilde / rep.l_star;
  const BigReal tol = boost::multiprecision::pow(BigReal(10), -cfg.tolerance_exponent());
  rep.recognized = rational_recognize(rep.ratio, cfg.q_max, tol);
  rep.residual = rep.recognized ? BigReal(boost::multiprecision::abs(rep.ratio - from_rational(*rep.recognized)))
                                : BigReal(0);
  rep.timings.total = seconds_since(start);
  return rep;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const InsufficientElements*>(&e)) return "InsufficientElements";
  if (dynamic_cast<const DegenerateRegulator*>(&e)) return "DegenerateRegulator";
  if (dynamic_cast<const EnumerationTooLarge*>(&e)) return "EnumerationTooLarge";
  if (dynamic_cast<const UnknownConductor*>(&e)) return "UnknownConductor";
  if (dynamic_cast<const ContourTooClose*>(&e)) return "ContourTooClose";
  if (dynamic_cast<const CoefficientShortfall*>(&e)) return "CoefficientShortfall";
  if (dynamic_cast<const EpsilonIndeterminate*>(&e)) return "EpsilonIndeterminate";
  if (dynamic_cast<const RankMismatch*>(&e)) return "RankMismatch";
  if (dynamic_cast<const LevelMismatch*>(&e)) return "LevelMismatch";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "InvalidArgument";
  return "Error";
}

std::vector<CaseOutcome> table_run(const RunConfig& cfg) {
  std::vector<CaseOutcome> out;
  for (const auto& row : table1_rows()) {
    const FermatIndex idx(row.n, row.a, row.b);
    CaseOutcome outcome{idx, std::nullopt, {}, {}};
    try {
      outcome.report = verify_case(idx, cfg);
    } catch (const std::exception& e) {
      outcome.error_kind = error_kind(e);
      outcome.error_message = e.what();
    }
    out.push_back(std::move(outcome));
  }
  return out;
}

}  // namespace fermat
