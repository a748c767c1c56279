#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermat/coeff_cache.hpp"
#include "fermat/errors.hpp"
#include "fermat/index.hpp"
#include "fermat/report.hpp"
#include "fermat/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitStructural = 3;

struct CaseArgs {
  int n = 0, a = 0, b = 0;
};

std::string resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  const std::string env = fermat::default_cache_dir();
  return env.empty() ? "fermat_cache" : env;
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void print_summary(const fermat::CaseReport& rep) {
  std::cout << rep.idx.to_string() << "  g=" << rep.idx.g() << "  N(f)=" << rep.conductor_norm << '\n'
            << "  R       = " << fermat::to_string(rep.r, rep.digits) << '\n'
            << "  D_ab    = " << fermat::to_string(rep.d_ab, rep.digits) << '\n'
            << "  R~      = " << fermat::to_string(rep.r_tilde, rep.digits) << '\n'
            << "  L*(0)   = " << fermat::to_string(rep.l_star, rep.digits) << '\n'
            << "  R~/L*   = " << fermat::to_string(rep.ratio, rep.digits) << '\n'
            << "  epsilon = " << rep.epsilon << '\n';
  if (rep.recognized)
    std::cout << "  recognized " << fermat::rational_string(*rep.recognized) << " (residual "
              << fermat::to_string(rep.residual, 3) << ")\n";
  else
    std::cout << "  no rational recognized\n";
  if (rep.expected)
    std::cout << "  expected " << fermat::rational_string(*rep.expected) << ": "
              << (rep.matches_expected() ? "match" : "MISMATCH") << '\n';
}

int run_verify(const CaseArgs& c, const fermat::RunConfig& cfg, const std::string& json_path) {
  const fermat::FermatIndex idx(c.n, c.a, c.b);
  fermat::CaseOutcome outcome{idx, std::nullopt, {}, {}};
  try {
    outcome.report = fermat::verify_case(idx, cfg);
  } catch (const fermat::Error& e) {
    outcome.error_kind = fermat::error_kind(e);
    outcome.error_message = e.what();
  }
  if (!json_path.empty()) write_text(json_path, fermat::outcome_json(outcome).dump(2) + "\n");
  if (!outcome.report) {
    std::cerr << outcome.error_kind << ": " << outcome.error_message << '\n';
    return kExitStructural;
  }
  print_summary(*outcome.report);
  const auto& rep = *outcome.report;
  if (!rep.recognized) return kExitMismatch;
  if (rep.expected && !rep.matches_expected()) return kExitMismatch;
  return kExitOk;
}

int run_table(const fermat::RunConfig& cfg, const std::string& csv_path, const std::string& json_path) {
  const auto outcomes = fermat::table_run(cfg);
  std::string csv = fermat::csv_header() + "\n";
  nlohmann::json rows = nlohmann::json::array();
  int matched = 0;
  bool structural = false;
  for (const auto& o : outcomes) {
    rows.push_back(fermat::outcome_json(o));
    if (o.report) {
      csv += fermat::csv_row(*o.report) + "\n";
      matched += o.ok();
      std::cerr << o.idx.to_string() << ": "
                << (o.report->recognized ? fermat::rational_string(*o.report->recognized) : "none") << " expected "
                << fermat::rational_string(*o.report->expected) << (o.ok() ? "  ok" : "  MISMATCH") << '\n';
    } else {
      structural = true;
      std::cerr << o.idx.to_string() << ": " << o.error_kind << ": " << o.error_message << '\n';
    }
  }
  write_text(csv_path, csv);
  if (!json_path.empty()) write_text(json_path, rows.dump(2) + "\n");
  std::cerr << matched << "/" << outcomes.size() << " rows match\n";
  if (structural) return kExitStructural;
  return matched == static_cast<int>(outcomes.size()) ? kExitOk : kExitMismatch;
}

int run_coeffs(const CaseArgs& c, const std::string& cache_dir, std::int64_t upto, unsigned threads) {
  const fermat::FermatIndex idx(c.n, c.a, c.b);
  const auto coeffs = fermat::cached_dirichlet_coeffs(cache_dir, idx, upto, threads);
  std::cout << idx.to_string() << ": " << coeffs.size() - 1 << " coefficients in "
            << fermat::coeff_cache_path(cache_dir, idx) << '\n';
  return kExitOk;
}

void add_case_options(CLI::App* sub, CaseArgs& c) {
  sub->add_option("--N", c.n, "Fermat degree")->required()->check(CLI::Range(3, 1000));
  sub->add_option("--a", c.a, "first exponent")->required();
  sub->add_option("--b", c.b, "second exponent")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of Beilinson's conjecture for Fermat motives"};
  app.require_subcommand(1);
  app.fallthrough();

  fermat::RunConfig cfg;
  std::string cache_flag;
  int tol_exp = 0;
  app.add_option("--q-max", cfg.q_max, "largest denominator accepted by rational recognition")
      ->check(CLI::PositiveNumber);
  auto* tol_opt = app.add_option("--tol-exp", tol_exp, "recognition tolerance 10^-k (default digits-5)");
  app.add_option("--cache-dir", cache_flag, "coefficient cache directory (default $FERMAT_CACHE_DIR or ./fermat_cache)");
  app.add_option("--threads", cfg.threads, "worker threads for coefficient generation")->check(CLI::PositiveNumber);

  CaseArgs case_args;
  std::string json_path, csv_path = "-";
  long long conductor = 0;
  std::int64_t upto = 0;

  auto* verify = app.add_subcommand("verify", "run one (N,a,b)");
  add_case_options(verify, case_args);
  verify->add_option("--digits", cfg.digits, "target decimal digits")->check(CLI::Range(8u, 200u));
  verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  auto* cond_opt = verify->add_option("--conductor", conductor, "norm of the conductor for cases outside the table")
                       ->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "run every row of the reference table");
  table->add_option("--digits", cfg.digits, "target decimal digits")->check(CLI::Range(8u, 200u));
  table->add_option("--out", csv_path, "CSV output path ('-' for stdout)");
  table->add_option("--json", json_path, "JSON output path");

  auto* coeffs = app.add_subcommand("coeffs", "prefill the Dirichlet coefficient cache");
  add_case_options(coeffs, case_args);
  coeffs->add_option("--upto", upto, "number of coefficients")->required()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (*tol_opt) cfg.tol_exp = tol_exp;
  if (*cond_opt) cfg.conductor = conductor;
  cfg.cache_dir = resolve_cache_dir(cache_flag);

  try {
    if (*verify) return run_verify(case_args, cfg, json_path);
    if (*table) return run_table(cfg, csv_path, json_path);
    if (*coeffs) return run_coeffs(case_args, cfg.cache_dir, upto, cfg.threads);
  } catch (const fermat::Error& e) {
    std::cerr << fermat::error_kind(e) << ": " << e.what() << '\n';
    return kExitStructural;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
