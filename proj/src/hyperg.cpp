#include "fermat/hyperg.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "fermat/bernoulli.hpp"
#include "fermat/index.hpp"

namespace fermat {

namespace {

unsigned bits_to_digits(unsigned bits) { return static_cast<unsigned>(bits / 3.3219280948873623) + 2; }

constexpr unsigned kGuardBits = 40;

void check_angle(const Rational& x, const char* what) {
  if (x <= 0 || x >= 1) throw std::invalid_argument(std::string(what) + ": argument must lie in (0, 1)");
}

template <typename Key>
class Memo {
 public:
  template <typename Fn>
  BigReal get(const Key& key, Fn compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    BigReal value = compute();
    std::lock_guard<std::mutex> lock(mu_);
    table_.emplace(key, value);
    return value;
  }

 private:
  std::mutex mu_;
  std::map<Key, BigReal> table_;
};

}  // namespace

BigReal gamma_rat(const Rational& x, unsigned prec) {
  if (x <= 0) throw std::invalid_argument("gamma_rat: x must be positive");
  static Memo<std::pair<std::string, unsigned>> memo;
  return memo.get({x.str(), prec}, [&] {
    PrecisionGuard guard(bits_to_digits(prec + kGuardBits));
    BigReal r;
    BigReal xr(x);
    mpfr_gamma(r.backend().data(), xr.backend().data(), MPFR_RNDN);
    return r;
  });
}

BigReal beta(const Rational& alpha, const Rational& b, unsigned prec) {
  PrecisionGuard guard(bits_to_digits(prec + kGuardBits));
  return gamma_rat(alpha, prec) * gamma_rat(b, prec) / gamma_rat(alpha + b, prec);
}

BigReal hurwitz_zeta_int(unsigned s, long long m, unsigned prec) {
  if (s < 2 || m < 1) throw std::invalid_argument("hurwitz_zeta_int: need s >= 2 and m >= 1");
  PrecisionGuard guard(bits_to_digits(prec + kGuardBits));
  // the asymptotic series reaches 2^-prec only once m is past ~ prec ln2 / (2 pi)
  const long long m_min = static_cast<long long>(prec / 8 + s + 10);
  if (m < m_min) {
    BigReal head = 0;
    for (long long k = m; k < m_min; ++k) head += 1 / boost::multiprecision::pow(BigReal(k), static_cast<long>(s));
    return head + hurwitz_zeta_int(s, m_min, prec);
  }
  const BigReal mr(m);
  const BigReal inv_m = 1 / mr;
  const BigReal m_pow = boost::multiprecision::pow(inv_m, static_cast<long>(s));  // m^{-s}
  BigReal result = mr * m_pow / (s - 1) + m_pow / 2;
  const BigReal eps = pow2_neg(static_cast<long>(prec) + 8) * result;
  // sum_j B_{2j}/(2j)! (s)_{2j-1} m^{-s-2j+1}
  BigReal rising = s;         // (s)_{2j-1}
  BigReal power = m_pow * mr;  // m^{-s-2j+1}, updated below
  BigReal factorial = 1;       // (2j)!
  BigReal last = -1;
  for (unsigned j = 1; j < 500; ++j) {
    if (j > 1) rising *= BigReal(s + 2 * j - 3) * (s + 2 * j - 2);
    power *= inv_m * inv_m;
    factorial *= BigReal(2 * j - 1) * (2 * j);
    const BigReal term = from_rational(bernoulli_number(2 * j)) * rising * power / factorial;
    const BigReal mag = boost::multiprecision::abs(term);
    if (last >= 0 && mag > last) throw std::logic_error("hurwitz_zeta_int: m too small for requested precision");
    result += term;
    if (mag < eps) return result;
    last = mag;
  }
  throw std::logic_error("hurwitz_zeta_int: no convergence");
}

namespace {

// Coefficients c_k with t_n ~ C sum_k c_k n^{-k-2}, exact.
std::vector<Rational> tail_coefficients(const Rational& alpha, const Rational& b, unsigned count) {
  const Rational s = alpha + b;
  std::vector<Rational> d(count + 1, Rational(0));
  for (unsigned k = 1; k <= count; ++k) {
    const Rational bsum = bernoulli_poly(k + 1, alpha) + bernoulli_poly(k + 1, b) - bernoulli_poly(k + 1, s) -
                          bernoulli_poly(k + 1, Rational(1));
    const Rational sign = (k % 2 == 1) ? 1 : -1;
    d[k] = sign * bsum / Rational(k * (k + 1));
  }
  // exp(sum_k d_k x^{-k}) = sum_n e_n x^{-n}
  std::vector<Rational> e(count + 1, Rational(0));
  e[0] = 1;
  for (unsigned n = 1; n <= count; ++n) {
    Rational acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += Rational(k) * d[k] * e[n - k];
    e[n] = acc / Rational(n);
  }
  // times 1/(1 + (s-1)/x) = sum_j (1-s)^j x^{-j}
  std::vector<Rational> c(count + 1, Rational(0));
  for (unsigned k = 0; k <= count; ++k) {
    Rational pw = 1;
    for (unsigned j = 0; j <= k; ++j) {
      c[k] += e[k - j] * pw;
      pw *= (1 - s);
    }
  }
  return c;
}

BigReal f3f2_compute(const Rational& alpha, const Rational& b, unsigned prec) {
  const Rational s = alpha + b;
  if (s == 1) return BigReal(1);
  PrecisionGuard guard(bits_to_digits(prec + kGuardBits));
  const BigReal eps = pow2_neg(static_cast<long>(prec) + 16);
  const BigReal ar = from_rational(alpha), br = from_rational(b), sr = from_rational(s);
  const BigReal sm1 = sr - 1;
  const BigReal c_const = sm1 * gamma_rat(s, prec) / (gamma_rat(alpha, prec) * gamma_rat(b, prec));

  long long m = std::max<long long>(64, static_cast<long long>(prec) * 2);
  for (int attempt = 0; attempt < 6; ++attempt, m *= 4) {
    // direct part, n = 0 .. m-1
    BigReal u = 1, sum = 0;
    for (long long n = 0; n < m; ++n) {
      sum += sm1 / (sm1 + n) * u;
      u *= (ar + n) * (br + n) / ((sr + n) * (n + 1));
    }
    // asymptotic tail
    const unsigned max_k = std::min<unsigned>(prec / 2 + 40, 400);
    const std::vector<Rational> c = tail_coefficients(alpha, b, max_k);
    BigReal tail = 0, last = -1;
    bool converged = false;
    for (unsigned k = 0; k <= max_k; ++k) {
      if (c[k] == 0) continue;
      const BigReal term = from_rational(c[k]) * hurwitz_zeta_int(k + 2, m, prec);
      const BigReal mag = boost::multiprecision::abs(term);
      if (last >= 0 && mag > last) break;
      tail += term;
      last = mag;
      if (mag * boost::multiprecision::abs(c_const) < eps) {
        converged = true;
        break;
      }
    }
    if (converged) return sum + c_const * tail;
  }
  throw std::logic_error("f3f2_at1: tail expansion did not converge");
}

}  // namespace

BigReal f3f2_at1(const Rational& alpha, const Rational& b, unsigned prec) {
  check_angle(alpha, "f3f2_at1");
  check_angle(b, "f3f2_at1");
  static Memo<std::tuple<std::string, std::string, unsigned>> memo;
  return memo.get({alpha.str(), b.str(), prec}, [&] { return f3f2_compute(alpha, b, prec); });
}

BigReal f_tilde(const Rational& alpha, const Rational& b, unsigned prec) {
  PrecisionGuard guard(bits_to_digits(prec + kGuardBits));
  const BigReal bb = beta(alpha, b, prec);
  return bb * bb * f3f2_at1(alpha, b, prec);
}

BigReal f_val(int n, long long a, long long b, unsigned prec) {
  const int pa = angle(a, n), pb = angle(b, n), na = angle(-a, n), nb = angle(-b, n);
  if (pa == 0 || pb == 0 || angle(a + b, n) == 0) throw std::invalid_argument("f_val: (a, b) not in I_N");
  PrecisionGuard guard(bits_to_digits(prec + kGuardBits));
  return f_tilde(Rational(pa, n), Rational(pb, n), prec) - f_tilde(Rational(na, n), Rational(nb, n), prec);
}

}  // namespace fermat
