#include "fermat/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fermat/errors.hpp"

namespace fermat {

long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<int> prime_divisors(long long n) {
  std::vector<int> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

int euler_phi(int n) {
  int r = n;
  for (int p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

std::vector<int> unit_residues(int n) {
  std::vector<int> out;
  for (int h = 1; h <= n; ++h)
    if (gcd_ll(h, n) == 1) out.push_back(h % n);
  if (n == 1) out = {0};
  std::sort(out.begin(), out.end());
  return out;
}

int inverse_mod(int h, int n) {
  h = static_cast<int>(mod_floor(h, n));
  for (int k = 1; k < n; ++k)
    if (static_cast<long long>(h) * k % n == 1) return k;
  if (n == 1) return 0;
  throw std::invalid_argument("inverse_mod: not a unit");
}

namespace {

IntPoly poly_exact_div(IntPoly num, const IntPoly& den) {
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  IntPoly q(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    const long long c = num[i] / den[dn];
    q[i - dn] = c;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (int i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic_poly: inexact division");
  return q;
}

}  // namespace

IntPoly cyclotomic_poly(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  static std::mutex mu;
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_exact_div(p, cyclotomic_poly(d));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(n, p);
  return p;
}

namespace detail {

struct LevelData {
  int n;
  int phi;
  // reduction[k] = t^k mod Phi_n for k in [0, n)
  std::vector<std::vector<long long>> reduction;
};

std::shared_ptr<const LevelData> level_data(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic level must be >= 1");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const LevelData>> memo;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  auto data = std::make_shared<LevelData>();
  data->n = n;
  const IntPoly phi_poly = cyclotomic_poly(n);
  data->phi = static_cast<int>(phi_poly.size()) - 1;
  const int d = data->phi;
  std::vector<long long> cur(d, 0);
  cur[0] = 1;
  if (d == 1 && n <= 2) cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    data->reduction.push_back(cur);
    // multiply by t, then reduce the t^d term with the monic Phi_n
    std::vector<long long> next(d, 0);
    const long long top = cur[d - 1];
    for (int i = d - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (int i = 0; i < d; ++i) next[i] -= top * phi_poly[i];
    cur = std::move(next);
  }
  memo.emplace(n, data);
  return data;
}

}  // namespace detail

const std::vector<long long>& power_reduction(int n, long long k) {
  return detail::level_data(n)->reduction[mod_floor(k, n)];
}

GaloisAut::GaloisAut(long long h, int level) : h_(static_cast<int>(mod_floor(h, level))), level_(level) {
  if (gcd_ll(h_, level_) != 1) throw std::invalid_argument("GaloisAut: h must be a unit mod N");
}

GaloisAut GaloisAut::operator*(const GaloisAut& other) const {
  if (other.level_ != level_) throw LevelMismatch("GaloisAut: level mismatch");
  return GaloisAut(static_cast<long long>(h_) * other.h_, level_);
}

CycElt::CycElt(int level) : data_(detail::level_data(level)), coeffs_(data_->phi, Rational(0)) {}

CycElt::CycElt(int level, const Rational& value) : CycElt(level) { coeffs_[0] = value; }

CycElt::CycElt(std::shared_ptr<const detail::LevelData> data, std::vector<Rational> coeffs)
    : data_(std::move(data)), coeffs_(std::move(coeffs)) {}

int CycElt::level() const { return data_->n; }

CycElt CycElt::zeta(int level, long long k) {
  std::vector<Rational> c(static_cast<std::size_t>(mod_floor(k, level)) + 1, Rational(0));
  c.back() = 1;
  return from_powers(level, c);
}

CycElt CycElt::from_powers(int level, const std::vector<Rational>& coeffs) {
  auto data = detail::level_data(level);
  std::vector<Rational> out(data->phi, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const auto& row = data->reduction[k % static_cast<std::size_t>(level)];
    for (int i = 0; i < data->phi; ++i)
      if (row[i] != 0) out[i] += coeffs[k] * row[i];
  }
  return CycElt(std::move(data), std::move(out));
}

CycElt CycElt::from_terms(int level, std::initializer_list<std::pair<long long, long long>> terms) {
  CycElt out(level);
  for (const auto& [c, e] : terms) out += zeta(level, e) * Rational(c);
  return out;
}

bool CycElt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycElt::is_integral() const {
  for (const auto& c : coeffs_)
    if (denominator(c) != 1) return false;
  return true;
}

bool CycElt::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void CycElt::check_level(const CycElt& o) const {
  if (o.level() != level()) throw LevelMismatch("CycElt: level mismatch");
}

CycElt& CycElt::operator+=(const CycElt& o) {
  check_level(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycElt& CycElt::operator-=(const CycElt& o) {
  check_level(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycElt& CycElt::operator*=(const CycElt& o) {
  check_level(o);
  const std::size_t d = coeffs_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  *this = from_powers(level(), prod);
  return *this;
}

CycElt& CycElt::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CycElt CycElt::operator-() const {
  CycElt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycElt CycElt::galois(long long h) const {
  const int n = level();
  if (gcd_ll(mod_floor(h, n), n) != 1) throw std::invalid_argument("galois: h must be a unit mod N");
  std::vector<Rational> spread(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) spread[mod_floor(h * static_cast<long long>(k), n)] += coeffs_[k];
  return from_powers(n, spread);
}

CycElt CycElt::pow(unsigned e) const {
  CycElt result(level(), Rational(1));
  CycElt base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

CycElt galois_apply(const GaloisAut& sigma, const CycElt& z) {
  if (sigma.level() != z.level()) throw LevelMismatch("galois_apply: level mismatch");
  return z.galois(sigma.h());
}

BigComplex embed(const CycElt& z, unsigned prec_bits) {
  const unsigned digits = static_cast<unsigned>(prec_bits / 3.3219280948873623) + 12;
  PrecisionGuard guard(digits);
  const int n = z.level();
  const BigReal step = 2 * big_pi() / n;
  BigComplex acc;
  for (std::size_t k = 0; k < z.coeffs().size(); ++k) {
    const Rational& c = z.coeffs()[k];
    if (c == 0) continue;
    const BigReal cr = from_rational(c);
    const BigReal theta = step * static_cast<long>(k);
    acc.re += cr * boost::multiprecision::cos(theta);
    acc.im += cr * boost::multiprecision::sin(theta);
  }
  return acc;
}

Rational elt_norm(const CycElt& z) {
  CycElt prod(z.level(), Rational(1));
  for (int h : unit_residues(z.level())) prod *= z.galois(h);
  if (!prod.is_rational()) throw std::logic_error("elt_norm: product is not rational");
  return prod.rational_part();
}

Rational elt_trace(const CycElt& z) {
  CycElt sum(z.level());
  for (int h : unit_residues(z.level())) sum += z.galois(h);
  if (!sum.is_rational()) throw std::logic_error("elt_trace: sum is not rational");
  return sum.rational_part();
}

BigInt disc_abs(int n) {
  if (n < 1) throw std::invalid_argument("disc_abs: n must be positive");
  const int phi = euler_phi(n);
  BigInt num = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(phi));
  BigInt den = 1;
  for (int p : prime_divisors(n)) den *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(phi / (p - 1)));
  return num / den;
}

}  // namespace fermat
