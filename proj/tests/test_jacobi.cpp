#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "fermat/coeff_cache.hpp"
#include "fermat/errors.hpp"
#include "fermat/finite_field.hpp"
#include "fermat/jacobi.hpp"

using namespace fermat;

namespace {

long long powmod(long long b, long long e, long long m) {
  long long r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Projective points on x^3 + y^3 = z^3 over F_p.
long long fermat_cubic_points(long long p) {
  long long count = 0;
  for (long long x = 0; x < p; ++x)
    for (long long y = 0; y < p; ++y)
      for (long long z = 0; z < p; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if ((x * x % p * x + y * y % p * y - z * z % p * z) % p == 0) ++count;
      }
  return count / (p - 1);
}

// Jacobi sum at the degree-one prime (alpha) computed from scratch: find the
// residue r of zeta_N modulo (alpha), then chi(x) = zeta^k where
// x^{(p-1)/N} = r^k.
CycElt jacobi_by_residue_map(const FermatIndex& idx, const CycElt& alpha, long long p) {
  const int n = idx.N();
  long long r = -1;
  for (long long cand = 2; cand < p && r < 0; ++cand) {
    if (powmod(cand, n, p) != 1) continue;
    bool primitive = true;
    for (int d = 1; d < n; ++d)
      if (n % d == 0 && powmod(cand, d, p) == 1) primitive = false;
    if (!primitive) continue;
    long long val = 0;
    for (std::size_t k = 0; k < alpha.coeffs().size(); ++k) {
      const long long c = numerator(alpha.coeffs()[k]).convert_to<long long>();
      val = (val + mod_floor(c, p) * powmod(cand, static_cast<long long>(k), p)) % p;
    }
    if (val == 0) r = cand;
  }
  REQUIRE(r > 0);
  std::vector<long long> log_r(static_cast<std::size_t>(p), -1);
  long long cur = 1;
  for (int k = 0; k < n; ++k) {
    log_r[cur] = k;
    cur = cur * r % p;
  }
  auto chi = [&](long long x) { return log_r[powmod(x, (p - 1) / n, p)]; };
  std::vector<Rational> counts(static_cast<std::size_t>(n), Rational(0));
  for (long long x = 2; x < p; ++x)
    counts[(idx.a() * chi(x) + idx.b() * chi(mod_floor(1 - x, p))) % n] -= 1;
  return CycElt::from_powers(n, counts);
}

}  // namespace

TEST_CASE("finite fields") {
  const FiniteField f7(7, 1);
  CHECK(f7.q() == 7);
  CHECK(f7.generator() == 3);
  const FiniteField f9(3, 2);
  CHECK(f9.q() == 9);
  // t^2 + 1 is the first monic irreducible quadratic over F_3 in encoding order
  CHECK(f9.modulus() == IntPoly{1, 0, 1});
  const auto dlog = f9.dlog_table();
  for (long long x = 1; x < 9; ++x) CHECK(f9.pow(f9.generator(), dlog[x]) == x);
  const FiniteField f64(2, 6);
  for (long long x = 1; x < 64; ++x) CHECK(f64.mul(x, f64.pow(x, 62)) == 1);
}

TEST_CASE("jacobi sums: reference values") {
  CHECK(jacobi_sum(FermatIndex(5, 1, 1), 2) == CycElt(5, Rational(-4)));
  CHECK(jacobi_sum(FermatIndex(7, 1, 2), 3) == CycElt(7, Rational(-27)));

  const CycElt j = jacobi_sum(FermatIndex(3, 1, 1), 7);
  CHECK(j * j.conj() == CycElt(3, Rational(7)));
  CHECK(j + j.conj() == CycElt(3, Rational(-1)));
  CHECK(7 + 1 - fermat_cubic_points(7) == -1);
}

TEST_CASE("jacobi sums: Weil bound on random inputs") {
  std::mt19937 rng(2024);
  const std::vector<int> levels{3, 4, 5, 6, 7, 8, 9, 10, 12};
  int done = 0;
  while (done < 50) {
    const int n = levels[rng() % levels.size()];
    const int a = 1 + static_cast<int>(rng() % (n - 1));
    const int b = 1 + static_cast<int>(rng() % (n - 1));
    if ((a + b) % n == 0) continue;
    const long long p = 2 + static_cast<long long>(rng() % 200);
    if (!is_prime(p) || n % p == 0) continue;
    const SplittingData sd = splitting(n, p);
    long long q = 1;
    for (int i = 0; i < sd.f; ++i) q *= p;
    if (q > 200000) continue;
    const CycElt j = jacobi_sum(FermatIndex(n, a, b), p);
    CAPTURE(n);
    CAPTURE(p);
    CHECK(j.is_integral());
    CHECK(j * j.conj() == CycElt(n, Rational(q)));
    ++done;
  }
}

TEST_CASE("enumeration bound") {
  JacobiOptions opt;
  opt.max_field_size = 500;
  CHECK_THROWS_AS(jacobi_sum(FermatIndex(7, 1, 2), 3, opt), EnumerationTooLarge);
}

TEST_CASE("local factors: integrality and generator invariance") {
  const LocalFactorData lf = local_factor(FermatIndex(5, 1, 1), 2);
  CHECK(lf.poly == std::vector<BigInt>{1, 0, 0, 0, 4});
  const LocalFactorData l7 = local_factor(FermatIndex(3, 1, 1), 7);
  CHECK(l7.poly == std::vector<BigInt>{1, 1, 7});

  JacobiOptions second;
  second.generator_rank = 1;
  for (auto [n, a, b] : std::vector<std::tuple<int, int, int>>{{5, 1, 1}, {7, 1, 2}, {9, 1, 2}, {10, 1, 2}, {12, 1, 6}}) {
    for (long long p : {2LL, 11LL, 13LL, 19LL, 31LL, 37LL}) {
      if (n % p == 0) continue;
      long long q = 1;
      for (int i = 0; i < mult_order(p, n); ++i) q *= p;
      if (q > 2000000) continue;
      const FermatIndex idx(n, a, b);
      const LocalFactorData x = local_factor(idx, p);
      CHECK(x.poly.front() == 1);
      CHECK(static_cast<int>(x.poly.size()) == euler_phi(n) + 1);
      CHECK(local_factor(idx, p, second).poly == x.poly);
    }
  }
}

TEST_CASE("dirichlet coefficients") {
  const FermatIndex e(3, 1, 1);
  const auto a = dirichlet_coeffs(e, 200);
  CHECK(a[1] == 1);
  CHECK(a[7] == -1);
  // 2 is inert in Q(zeta_3): j = -2, factor 1 + 2T^2, matching a_2 = 0 on x^3 + y^3 = 1
  CHECK(a[2] == 0);
  CHECK(a[4] == -2);

  for (auto [n, x, y] : std::vector<std::tuple<int, int, int>>{{3, 1, 1}, {5, 1, 1}, {7, 1, 2}, {12, 1, 2}}) {
    const auto c = dirichlet_coeffs(FermatIndex(n, x, y), 100);
    for (int m = 1; m <= 100; ++m)
      for (int k = 1; m * k <= 100; ++k)
        if (gcd_ll(m, k) == 1) CHECK(c[m * k] == c[m] * c[k]);
  }

  const auto serial = dirichlet_coeffs(FermatIndex(7, 1, 2), 3000, 1);
  const auto parallel = dirichlet_coeffs(FermatIndex(7, 1, 2), 3000, 4);
  CHECK(serial == parallel);
}

TEST_CASE("dirichlet coefficients: symmetries") {
  const std::int64_t x = 400;
  auto same = [&](const FermatIndex& p, const FermatIndex& q) { return dirichlet_coeffs(p, x) == dirichlet_coeffs(q, x); };
  for (auto [n, a, b] : std::vector<std::tuple<int, int, int>>{{5, 1, 1}, {7, 1, 2}, {9, 1, 2}}) {
    const FermatIndex idx(n, a, b);
    CHECK(same(idx, FermatIndex(n, b, a)));
    CHECK(same(idx, FermatIndex(n, idx.c(), b)));
    CHECK(same(idx, FermatIndex(n, a, idx.c())));
    CHECK(same(idx, idx.negated()));
    for (int h : unit_residues(n)) CHECK(same(idx, idx.scaled(h)));
  }
  // even N: (c, b) when b is even, (a, c) when a is even
  CHECK(same(FermatIndex(10, 1, 2), FermatIndex(10, 7, 2)));
  CHECK(same(FermatIndex(12, 1, 6), FermatIndex(12, 5, 6)));
  CHECK(same(FermatIndex(10, 2, 5), FermatIndex(10, 2, 3)));
  CHECK(same(FermatIndex(6, 1, 2), FermatIndex(6, 3, 2)));
}

TEST_CASE("coefficient cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / ("fermat_cache_test_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  const FermatIndex idx(5, 1, 1);
  const auto fresh = cached_dirichlet_coeffs(dir.string(), idx, 500);
  const auto loaded = load_coeffs(dir.string(), idx, 300);
  REQUIRE(loaded.has_value());
  CHECK(std::vector<std::int64_t>(fresh.begin(), fresh.begin() + 301) == *loaded);
  CHECK_FALSE(load_coeffs(dir.string(), idx, 501).has_value());

  std::ifstream in(coeff_cache_path(dir.string(), idx));
  std::string header;
  std::getline(in, header);
  CHECK(header == "5 1 1 500 1");
  std::filesystem::remove_all(dir);
}

TEST_CASE("hecke character data") {
  for (const auto& entry : character_table()) {
    const FermatIndex idx(entry.n, entry.a, entry.b);
    for (const auto& v : entry.values) {
      CAPTURE(idx.to_string());
      CHECK(hecke_verify(idx, v.generator));
    }
  }
  // (4,1,1): j((1 - 2 zeta_4)) = 1 - 2 zeta_4 with phi = 1
  const FermatIndex i4(4, 1, 1);
  const CycElt alpha = CycElt::from_terms(4, {{1, 0}, {-2, 1}});
  CHECK(hecke_target(i4, alpha, CycElt(4, Rational(1))) == alpha);
  CHECK(jacobi_by_residue_map(i4, alpha, 5) == alpha);
  // inert primes
  CHECK(hecke_target(FermatIndex(5, 1, 1), CycElt(5, Rational(2)), CycElt(5, Rational(-1))) == CycElt(5, Rational(-4)));
  CHECK(hecke_target(FermatIndex(7, 1, 2), CycElt(7, Rational(3)), CycElt(7, Rational(-1))) == CycElt(7, Rational(-27)));
  // a wrong character value is rejected
  CHECK_FALSE(hecke_verify(FermatIndex(9, 1, 2), CycElt::from_terms(9, {{1, 0}, {1, 1}, {-1, 2}}), CycElt::zeta(9, 1)));
}

TEST_CASE("hecke targets agree with the residue-map oracle") {
  for (const auto& entry : character_table()) {
    const FermatIndex idx(entry.n, entry.a, entry.b);
    for (const auto& v : entry.values) {
      const Rational nm = elt_norm(v.generator);
      const long long p = numerator(nm).convert_to<long long>();
      if (!is_prime(p)) continue;  // inert generators have norm p^f
      CAPTURE(idx.to_string());
      CHECK(jacobi_by_residue_map(idx, v.generator, p) == hecke_target(idx, v.generator, v.phi));
    }
  }
}
