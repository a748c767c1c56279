#pragma once

#include <initializer_list>
#include <memory>
#include <utility>
#include <vector>

#include "fermat/bigreal.hpp"

namespace fermat {

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<long long>;

/// Representative of a in {0, ..., n-1}.
inline long long mod_floor(long long a, long long n) {
  const long long r = a % n;
  return r < 0 ? r + n : r;
}

long long gcd_ll(long long a, long long b);
int euler_phi(int n);
std::vector<int> prime_divisors(long long n);
/// (Z/n)^x in ascending order.
std::vector<int> unit_residues(int n);
/// Multiplicative inverse of h modulo n; h must be a unit.
int inverse_mod(int h, int n);

/// The n-th cyclotomic polynomial.
IntPoly cyclotomic_poly(int n);

namespace detail {
struct LevelData;
std::shared_ptr<const LevelData> level_data(int n);
}  // namespace detail

/// sigma_h : zeta_N -> zeta_N^h.
class GaloisAut {
 public:
  GaloisAut(long long h, int level);
  int h() const { return h_; }
  int level() const { return level_; }
  GaloisAut operator*(const GaloisAut& other) const;
  GaloisAut inverse() const { return GaloisAut(inverse_mod(h_, level_), level_); }

 private:
  int h_;
  int level_;
};

/// Exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
class CycElt {
 public:
  explicit CycElt(int level);
  CycElt(int level, const Rational& value);

  static CycElt zeta(int level, long long k = 1);
  /// sum_k coeffs[k] zeta^k for any length; reduced modulo Phi_N.
  static CycElt from_powers(int level, const std::vector<Rational>& coeffs);
  /// sum of c * zeta^e over the given (c, e) terms.
  static CycElt from_terms(int level, std::initializer_list<std::pair<long long, long long>> terms);

  int level() const;
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_integral() const;
  bool is_rational() const;
  /// Constant coefficient; meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  CycElt& operator+=(const CycElt& o);
  CycElt& operator-=(const CycElt& o);
  CycElt& operator*=(const CycElt& o);
  CycElt& operator*=(const Rational& q);
  CycElt operator-() const;

  friend bool operator==(const CycElt& a, const CycElt& b) {
    return a.level() == b.level() && a.coeffs_ == b.coeffs_;
  }

  CycElt galois(long long h) const;
  CycElt conj() const { return galois(-1); }
  CycElt pow(unsigned e) const;

 private:
  CycElt(std::shared_ptr<const detail::LevelData> data, std::vector<Rational> coeffs);
  void check_level(const CycElt& o) const;

  std::shared_ptr<const detail::LevelData> data_;
  std::vector<Rational> coeffs_;
};

inline CycElt operator+(CycElt a, const CycElt& b) { return a += b; }
inline CycElt operator-(CycElt a, const CycElt& b) { return a -= b; }
inline CycElt operator*(CycElt a, const CycElt& b) { return a *= b; }
inline CycElt operator*(CycElt a, const Rational& q) { return a *= q; }

CycElt galois_apply(const GaloisAut& sigma, const CycElt& z);

/// Image under zeta_N -> exp(2 pi i / N), computed with `prec_bits` bits.
BigComplex embed(const CycElt& z, unsigned prec_bits);

/// Field norm prod_h sigma_h(z), exact.
Rational elt_norm(const CycElt& z);
/// Field trace sum_h sigma_h(z), exact.
Rational elt_trace(const CycElt& z);

/// |disc(Q(zeta_N))| = N^phi / prod_{p | N} p^{phi/(p-1)}.
BigInt disc_abs(int n);

/// t^k reduced modulo Phi_N, as integer coefficients of length phi(N).
const std::vector<long long>& power_reduction(int n, long long k);

}  // namespace fermat
