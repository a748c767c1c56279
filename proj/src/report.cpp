#include "fermat/report.hpp"

#include <sstream>

namespace fermat {

namespace {

std::string h_string(const std::vector<int>& hs) {
  std::string out;
  for (std::size_t i = 0; i < hs.size(); ++i) out += (i ? " " : "") + std::to_string(hs[i]);
  return out;
}

std::string num(const BigReal& x, unsigned digits) { return to_string(x, static_cast<int>(digits)); }

}  // namespace

std::string rational_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string csv_header() { return "N,a,b,g,H,D_ab,R,R_tilde,L_star,ratio,recognized,residual,epsilon"; }

std::string csv_row(const CaseReport& rep) {
  std::ostringstream os;
  const unsigned d = rep.digits;
  os << rep.idx.N() << ',' << rep.idx.a() << ',' << rep.idx.b() << ',' << rep.idx.g() << ',' << h_string(rep.h)
     << ',' << num(rep.d_ab, d) << ',' << num(rep.r, d) << ',' << num(rep.r_tilde, d) << ',' << num(rep.l_star, d)
     << ',' << num(rep.ratio, d) << ',' << (rep.recognized ? rational_string(*rep.recognized) : "") << ','
     << (rep.recognized ? num(rep.residual, 3) : "") << ',' << rep.epsilon;
  return os.str();
}

nlohmann::json report_json(const CaseReport& rep) {
  const unsigned d = rep.digits;
  nlohmann::json body;
  body["N"] = rep.idx.N();
  body["a"] = rep.idx.a();
  body["b"] = rep.idx.b();
  body["g"] = rep.idx.g();
  body["digits"] = rep.digits;
  body["H"] = rep.h;
  std::vector<std::string> elements;
  for (const auto& e : rep.elements) elements.emplace_back(element_name(e.kind));
  body["elements"] = elements;
  body["conductor_norm"] = rep.conductor_norm;
  body["coefficients"] = rep.coefficients;
  body["D_N"] = num(rep.d_n, d);
  body["D_ab"] = num(rep.d_ab, d);
  body["R"] = num(rep.r, d);
  body["R_tilde"] = num(rep.r_tilde, d);
  body["L_star"] = num(rep.l_star, d);
  body["ratio"] = num(rep.ratio, d);
  body["epsilon"] = rep.epsilon;
  body["recognized"] = rep.recognized ? nlohmann::json(rational_string(*rep.recognized)) : nlohmann::json();
  body["residual"] = rep.recognized ? nlohmann::json(num(rep.residual, 3)) : nlohmann::json();
  body["expected"] = rep.expected ? nlohmann::json(rational_string(*rep.expected)) : nlohmann::json();
  body["matches_expected"] = rep.matches_expected();

  nlohmann::json timings;
  timings["regulator_s"] = rep.timings.regulator;
  timings["lattice_s"] = rep.timings.lattice;
  timings["lfunction_s"] = rep.timings.lfunction;
  timings["total_s"] = rep.timings.total;
  return {{"report", body}, {"timings", timings}};
}

nlohmann::json outcome_json(const CaseOutcome& outcome) {
  if (outcome.report) return report_json(*outcome.report);
  nlohmann::json body;
  body["N"] = outcome.idx.N();
  body["a"] = outcome.idx.a();
  body["b"] = outcome.idx.b();
  body["error"] = outcome.error_kind;
  body["message"] = outcome.error_message;
  return {{"report", body}, {"timings", nlohmann::json::object()}};
}

}  // namespace fermat
