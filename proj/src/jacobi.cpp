#include "fermat/jacobi.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fermat/errors.hpp"
#include "fermat/finite_field.hpp"

namespace fermat {

SplittingData splitting(int n, long long p) {
  if (!is_prime(p) || n % p == 0) throw std::invalid_argument("splitting: need a prime p not dividing N");
  const int f = mult_order(p, n);
  return {p, f, euler_phi(n) / f};
}

CycElt jacobi_sum(const FermatIndex& idx, long long p, const JacobiOptions& opt) {
  const int n = idx.N();
  const SplittingData sd = splitting(n, p);
  long long q = 1;
  for (int i = 0; i < sd.f; ++i) {
    if (q > opt.max_field_size / p) throw EnumerationTooLarge("jacobi_sum: residue field too large at p=" + std::to_string(p));
    q *= p;
  }
  const FiniteField field(p, sd.f, opt.generator_rank);
  const std::vector<std::uint32_t> dlog = field.dlog_table();

  std::vector<long long> counts(static_cast<std::size_t>(n), 0);
  const long long a = idx.a(), b = idx.b();
  for (long long x = 2; x < q; ++x) {
    const long long y = field.sub(1, x);
    if (y == 0) continue;
    counts[static_cast<std::size_t>((a * dlog[x] + b * dlog[y]) % n)] += 1;
  }
  std::vector<Rational> coeffs(counts.size());
  for (std::size_t e = 0; e < counts.size(); ++e) coeffs[e] = -counts[e];
  return CycElt::from_powers(n, coeffs);
}

std::vector<int> coset_representatives(int n, long long p) {
  std::vector<int> reps;
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (int h : unit_residues(n)) {
    if (covered[h]) continue;
    reps.push_back(h);
    long long x = h;
    do {
      covered[static_cast<std::size_t>(x)] = true;
      x = mod_floor(x * p, n);
    } while (x != h);
  }
  return reps;
}

LocalFactorData local_factor(const FermatIndex& idx, long long p, const JacobiOptions& opt) {
  const int n = idx.N();
  const SplittingData sd = splitting(n, p);
  const CycElt j0 = jacobi_sum(idx, p, opt);

  // prod_h (1 - sigma_h(j0) U), U = T^f
  std::vector<CycElt> poly{CycElt(n, Rational(1))};
  for (int h : coset_representatives(n, p)) {
    const CycElt root = j0.galois(h);
    std::vector<CycElt> next(poly.size() + 1, CycElt(n));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= poly[i] * root;
    }
    poly = std::move(next);
  }

  LocalFactorData out{p, sd.f, std::vector<BigInt>(static_cast<std::size_t>(euler_phi(n)) + 1, BigInt(0))};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (!poly[i].is_rational() || denominator(poly[i].rational_part()) != 1)
      throw std::logic_error("local_factor: non-integral coefficient at p=" + std::to_string(p));
    out.poly[i * static_cast<std::size_t>(sd.f)] = numerator(poly[i].rational_part());
  }
  return out;
}

namespace {

// Coefficients of 1/P at p^0, p^f, p^{2f}, ... up to x.
std::vector<std::int64_t> local_series(const LocalFactorData& lf, std::int64_t x) {
  std::vector<__int128> pu;  // P in U = T^f
  for (std::size_t i = 0; i < lf.poly.size(); i += static_cast<std::size_t>(lf.f))
    pu.push_back(static_cast<__int128>(lf.poly[i].convert_to<long long>()));
  std::int64_t q = 1;
  for (int i = 0; i < lf.f; ++i) q *= lf.p;
  std::vector<std::int64_t> b{1};
  for (__int128 pk = q; pk <= x; pk *= q) {
    const std::size_t k = b.size();
    __int128 acc = 0;
    for (std::size_t i = 1; i < pu.size() && i <= k; ++i) acc -= pu[i] * b[k - i];
    b.push_back(static_cast<std::int64_t>(acc));
  }
  return b;
}

std::vector<std::int32_t> smallest_prime_factor(std::int64_t x) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(x) + 1, 0);
  for (std::int64_t i = 2; i <= x; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= x; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
  }
  return spf;
}

}  // namespace

std::vector<std::int64_t> dirichlet_coeffs(const FermatIndex& idx, std::int64_t x, unsigned threads) {
  if (x < 1) throw std::invalid_argument("dirichlet_coeffs: X must be >= 1");
  const int n = idx.N();
  const std::vector<std::int32_t> spf = smallest_prime_factor(x);

  std::vector<long long> primes;
  std::vector<int> orders;
  for (std::int64_t p = 2; p <= x; ++p) {
    if (spf[p] != p || n % p == 0) continue;
    std::int64_t q = 1;
    const int f = mult_order(p, n);
    bool fits = true;
    for (int i = 0; i < f && fits; ++i) {
      q *= p;
      fits = q <= x;
    }
    if (fits) {
      primes.push_back(p);
      orders.push_back(f);
    }
  }

  std::vector<std::vector<std::int64_t>> locals(primes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      try {
        locals[i] = local_series(local_factor(idx, primes[i]), x);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned nthreads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(primes.size())));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::int32_t> slot(static_cast<std::size_t>(x) + 1, -1);
  for (std::size_t i = 0; i < primes.size(); ++i) slot[primes[i]] = static_cast<std::int32_t>(i);

  std::vector<std::int64_t> a(static_cast<std::size_t>(x) + 1, 0);
  a[1] = 1;
  for (std::int64_t m = 2; m <= x; ++m) {
    const std::int64_t p = spf[m];
    std::int64_t rest = m;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (slot[p] < 0 || a[rest] == 0) continue;
    const auto& series = locals[slot[p]];
    const int f = orders[slot[p]];
    if (k % f != 0) continue;
    a[m] = series[k / f] * a[rest];
  }
  return a;
}

namespace {

CycElt z(int n, long long e) { return CycElt::zeta(n, e); }
CycElt c(int n, long long v) { return CycElt(n, Rational(v)); }

std::vector<CharacterEntry> build_table() {
  std::vector<CharacterEntry> t;
  // Q(zeta_3) = Q(zeta_6) with zeta_3 = zeta_6^2; Q(zeta_5) = Q(zeta_10) with zeta_5 = zeta_10^2.
  const CycElt s6 = c(6, -2) - z(6, 2) * Rational(3);
  const CycElt t6 = c(6, 1) + z(6, 2) * Rational(4);
  const CycElt a10 = c(10, 1) + z(10, 2) * Rational(2);
  const CycElt a12 = c(12, 2) - z(12, 1);

  t.push_back({3, 1, 1, 9, "(1-z3)^2", {}});
  t.push_back({4, 1, 1, 16, "(1-z4)^4", {{c(4, 1) - z(4, 1) * Rational(2), c(4, 1)}}});
  t.push_back({4, 1, 2, 8, "(1-z4)^3", {}});
  t.push_back({6, 1, 1, 144, "(2)^2(1-z3)^2", {{s6, -z(6, 2)}, {t6, -z(6, 4)}}});
  t.push_back({6, 1, 2, 12, "(2)(1-z3)", {{s6, z(6, 4)}, {t6, c(6, -1)}}});
  t.push_back({6, 1, 3, 48, "(2)^2(1-z3)", {{s6, -z(6, 4)}, {t6, c(6, -1)}}});
  t.push_back({6, 1, 4, 36, "(2)(1-z3)^2", {{s6, z(6, 2)}, {t6, -z(6, 4)}}});
  t.push_back({6, 2, 3, 12, "(2)(1-z3)", {}});
  t.push_back({5, 1, 1, 25, "(1-z5)^2", {{c(5, 2), c(5, -1)}}});
  t.push_back({10, 1, 2, 400, "(2)(1-z5)^2", {{a10, -z(10, 8)}}});
  t.push_back({10, 1, 4, 80, "(2)(1-z5)", {{a10, c(10, -1)}}});
  t.push_back({10, 1, 6, 400, "(2)(1-z5)^2", {{a10, -z(10, 4)}}});
  t.push_back({10, 2, 5, 80, "(2)(1-z5)", {}});
  t.push_back({12, 1, 2, 576, "(1-z4)^3(1-z3)", {{a12, -z(12, 1)}}});
  t.push_back({12, 1, 6, 576, "(1-z4)^3(1-z3)", {{a12, c(12, -1)}}});
  t.push_back({12, 2, 3, 576, "(1-z4)^3(1-z3)", {}});
  t.push_back({7, 1, 2, 7, "(1-z7)", {{c(7, 3), c(7, -1)}}});
  t.push_back({9, 1, 2, 81, "(1-z9)^4", {{c(9, 1) + z(9, 1) - z(9, 2), z(9, 8)}}});
  return t;
}

}  // namespace

const std::vector<CharacterEntry>& character_table() {
  static const std::vector<CharacterEntry> table = build_table();
  return table;
}

const CharacterEntry* find_character_entry(const FermatIndex& idx) {
  const auto orb = orbit(idx);
  for (const auto& e : character_table())
    if (e.n == idx.N() && orb.count({e.a, e.b}) != 0) return &e;
  return nullptr;
}

CycElt hecke_target(const FermatIndex& idx, const CycElt& alpha, const CycElt& phi) {
  CycElt target = phi;
  for (int h : h_set(idx)) target *= alpha.galois(inverse_mod(h, idx.N()));
  return target;
}

bool hecke_verify(const FermatIndex& idx, const CycElt& alpha, const CycElt& phi, const JacobiOptions& opt) {
  const int n = idx.N();
  if (alpha.level() != n || phi.level() != n) throw LevelMismatch("hecke_verify: level mismatch");
  const Rational norm = elt_norm(alpha);
  if (!alpha.is_integral() || denominator(norm) != 1) throw std::invalid_argument("hecke_verify: alpha is not integral");
  long long m = boost::multiprecision::abs(numerator(norm)).convert_to<long long>();
  const auto ps = prime_divisors(m);
  if (ps.size() != 1) throw std::invalid_argument("hecke_verify: norm of alpha is not a prime power");
  const long long p = ps.front();
  const SplittingData sd = splitting(n, p);
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (k != sd.f) throw std::invalid_argument("hecke_verify: (alpha) is not a prime ideal");

  // j0 is taken at the prime v0 where zeta -> r0 = g^{(q-1)/N}. The prime
  // (alpha) is sigma_h(v0) for the h with alpha(r0^{1/h}) = 0 in F_q, and
  // j((alpha)) = sigma_h(j0).
  const FiniteField field(p, sd.f, opt.generator_rank);
  const long long r0 = field.pow(field.generator(), static_cast<unsigned long long>((field.q() - 1) / n));
  auto vanishes_at = [&](long long r) {
    long long acc = 0;
    for (std::size_t i = alpha.coeffs().size(); i-- > 0;) {
      const long long c = mod_floor((numerator(alpha.coeffs()[i]) % p).convert_to<long long>(), p);
      acc = field.add(field.mul(acc, r), c);
    }
    return acc == 0;
  };
  for (int h : unit_residues(n)) {
    if (!vanishes_at(field.pow(r0, static_cast<unsigned long long>(inverse_mod(h, n))))) continue;
    return jacobi_sum(idx, p, opt).galois(h) == hecke_target(idx, alpha, phi);
  }
  throw std::logic_error("hecke_verify: no prime above p contains alpha");
}

bool hecke_verify(const FermatIndex& idx, const CycElt& alpha) {
  const CharacterEntry* entry = find_character_entry(idx);
  if (entry == nullptr || entry->a != idx.a() || entry->b != idx.b())
    throw UnknownConductor("hecke_verify: no character data for " + idx.to_string());
  for (const auto& v : entry->values)
    if (v.generator == alpha) return hecke_verify(idx, alpha, v.phi);
  throw std::invalid_argument("hecke_verify: alpha is not a listed generator for " + idx.to_string());
}

}  // namespace fermat
