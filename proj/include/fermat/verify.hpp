#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermat/bigreal.hpp"
#include "fermat/index.hpp"

namespace fermat {

struct RunConfig {
  unsigned digits = 15;
  long long q_max = 1000000;
  std::optional<int> tol_exp;  // tolerance 10^-tol_exp; default digits - 5
  std::string cache_dir;
  unsigned threads = 1;
  std::optional<long long> conductor;  // N(f) for cases outside the built-in table

  int tolerance_exponent() const { return tol_exp ? *tol_exp : static_cast<int>(digits) - 5; }
};

struct Timings {
  double regulator = 0;
  double lattice = 0;
  double lfunction = 0;
  double total = 0;
};

struct CaseReport {
  FermatIndex idx;
  unsigned digits;
  std::vector<int> h;
  std::vector<ElementDescriptor> elements;
  BigReal r;
  BigReal d_n;
  BigReal d_ab;
  BigReal r_tilde;
  BigReal l_star;
  BigReal ratio;  // R~ / L*
  std::optional<Rational> recognized;
  BigReal residual;  // |ratio - recognized|, meaningful when recognized
  int epsilon;
  BigReal epsilon_raw;
  long long conductor_norm;
  std::int64_t coefficients;
  std::optional<Rational> expected;  // reference-table value when the case is listed
  Timings timings;

  bool matches_expected() const { return expected && recognized && *expected == *recognized; }
};

struct TableRow {
  int n, a, b;
  Rational expected;  // R~ / L*
};

/// The 18 rows of the reference table in display order.
const std::vector<TableRow>& table1_rows();
std::optional<Rational> table1_expected(const FermatIndex& idx);

/// Full pipeline for one primitive index. Structural problems surface as
/// the corresponding fermat::Error subclasses.
CaseReport verify_case(const FermatIndex& idx, const RunConfig& cfg);

struct CaseOutcome {
  FermatIndex idx;
  std::optional<CaseReport> report;
  std::string error_kind;  // empty on success
  std::string error_message;

  bool ok() const { return report && report->matches_expected(); }
};

std::vector<CaseOutcome> table_run(const RunConfig& cfg);

/// Class name of a fermat::Error, e.g. "InsufficientElements".
std::string error_kind(const std::exception& e);

}  // namespace fermat
