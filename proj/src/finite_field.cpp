#include "fermat/finite_field.hpp"

#include <stdexcept>

namespace fermat {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int mult_order(long long p, int n) {
  if (gcd_ll(p, n) != 1) throw std::invalid_argument("mult_order: p and n not coprime");
  long long x = mod_floor(p, n);
  int k = 1;
  while (x != 1 % n) {
    x = x * p % n;
    ++k;
  }
  return k;
}

namespace {

using Poly = std::vector<long long>;  // over F_p, low to high, no trailing zeros

long long mulmod(long long x, long long y, long long m) {
  return static_cast<long long>(static_cast<__int128>(x) * y % m);
}

long long inv_mod_p(long long x, long long p) {
  long long r = 1, b = mod_floor(x, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, long long p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const long long lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const long long c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = mod_floor(a[shift + i] - mulmod(c, m[i], p), p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_mod(r, m, p);
}

Poly poly_powmod(Poly base, long long e, const Poly& m, long long p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Monic P of degree f is irreducible iff it shares no factor with t^{p^k} - t
// for k <= f/2.
bool is_irreducible(const Poly& m, long long p) {
  const int f = static_cast<int>(m.size()) - 1;
  Poly x{0, 1};
  Poly power = poly_mod(x, m, p);
  for (int k = 1; 2 * k <= f; ++k) {
    power = poly_powmod(power, p, m, p);
    Poly diff = power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = mod_floor(diff[1] - 1, p);
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(m, diff, p).size() > 1) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(long long p, int f, int generator_rank) : p_(p), f_(f) {
  if (!is_prime(p) || f < 1) throw std::invalid_argument("FiniteField: need a prime p and f >= 1");
  q_ = 1;
  for (int i = 0; i < f; ++i) {
    if (q_ > (1LL << 40) / p) throw std::invalid_argument("FiniteField: q too large");
    q_ *= p;
  }

  if (f == 1) {
    modulus_ = {0, 1};
  } else {
    for (long long code = 0; code < q_; ++code) {
      Poly m(f + 1, 0);
      long long r = code;
      for (int i = 0; i < f; ++i) {
        m[i] = r % p;
        r /= p;
      }
      m[f] = 1;
      if (is_irreducible(m, p)) {
        modulus_ = m;
        break;
      }
    }
    if (modulus_.empty()) throw std::logic_error("FiniteField: no irreducible modulus found");
  }

  const std::vector<int> factors_int = prime_divisors(q_ - 1);
  const std::vector<long long> factors(factors_int.begin(), factors_int.end());
  int seen = 0;
  for (long long x = 1; x < q_; ++x) {
    if (!is_primitive(x, factors)) continue;
    if (seen++ == generator_rank) {
      gen_ = x;
      break;
    }
  }
  if (gen_ == 0) throw std::invalid_argument("FiniteField: generator rank out of range");
}

long long FiniteField::add(long long x, long long y) const {
  if (f_ == 1) return (x + y) % p_;
  long long r = 0, scale = 1;
  for (int i = 0; i < f_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return r;
}

long long FiniteField::sub(long long x, long long y) const {
  if (f_ == 1) return mod_floor(x - y, p_);
  long long r = 0, scale = 1;
  for (int i = 0; i < f_; ++i) {
    r += mod_floor(x % p_ - y % p_, p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return r;
}

long long FiniteField::mul(long long x, long long y) const {
  if (f_ == 1) return mulmod(x, y, p_);
  long long xs[16] = {}, ys[16] = {}, prod[32] = {};
  for (int i = 0; i < f_; ++i) {
    xs[i] = x % p_;
    x /= p_;
    ys[i] = y % p_;
    y /= p_;
  }
  for (int i = 0; i < f_; ++i)
    for (int j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + xs[i] * ys[j]) % p_;
  for (int k = 2 * f_ - 2; k >= f_; --k) {
    const long long c = prod[k];
    if (c == 0) continue;
    for (int i = 0; i < f_; ++i) prod[k - f_ + i] = mod_floor(prod[k - f_ + i] - c * modulus_[i], p_);
    prod[k] = 0;
  }
  long long r = 0;
  for (int i = f_ - 1; i >= 0; --i) r = r * p_ + prod[i];
  return r;
}

long long FiniteField::pow(long long x, unsigned long long e) const {
  long long r = 1;
  while (e > 0) {
    if (e & 1ULL) r = mul(r, x);
    x = mul(x, x);
    e >>= 1U;
  }
  return r;
}

bool FiniteField::is_primitive(long long x, const std::vector<long long>& factors) const {
  if (x == 0) return false;
  for (long long r : factors)
    if (pow(x, static_cast<unsigned long long>((q_ - 1) / r)) == 1) return false;
  return q_ == 2 ? x == 1 : true;
}

std::vector<std::uint32_t> FiniteField::dlog_table() const {
  std::vector<std::uint32_t> table(static_cast<std::size_t>(q_), 0);
  long long cur = 1;
  for (long long k = 0; k < q_ - 1; ++k) {
    table[static_cast<std::size_t>(cur)] = static_cast<std::uint32_t>(k);
    cur = mul(cur, gen_);
  }
  return table;
}

}  // namespace fermat
