#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fermat/verify.hpp"

namespace fermat {

std::string rational_string(const Rational& q);  // "p/q", or "p" when q = 1

std::string csv_header();
std::string csv_row(const CaseReport& rep);

/// {"report": {...}, "timings": {...}}; the "report" body is deterministic
/// for a fixed configuration.
nlohmann::json report_json(const CaseReport& rep);
nlohmann::json outcome_json(const CaseOutcome& outcome);

}  // namespace fermat
