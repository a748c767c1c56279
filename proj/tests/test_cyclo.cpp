#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fermat/cyclo.hpp"

using namespace fermat;

namespace {

CycElt random_integral(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)));
  for (auto& x : c) x = dist(rng);
  return CycElt::from_powers(n, c);
}

bool close(const BigReal& x, const BigReal& y, const BigReal& tol) { return boost::multiprecision::abs(x - y) < tol; }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_poly(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic_poly(9) == IntPoly{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_poly(12) == IntPoly{1, 0, -1, 0, 1});
  for (int n = 1; n <= 40; ++n) {
    const IntPoly p = cyclotomic_poly(n);
    CHECK(static_cast<int>(p.size()) - 1 == euler_phi(n));
    CHECK(p.back() == 1);
  }
}

TEST_CASE("Phi_9 has no roots modulo small primes") {
  // t^9 - 1 = (t^3 - 1) Phi_9; a root of Phi_9 mod p is an element of order 9,
  // which exists only when 9 | p - 1.
  const IntPoly p = cyclotomic_poly(9);
  for (int q : {2, 5, 7, 11, 13, 17, 23, 29}) {
    for (int x = 0; x < q; ++x) {
      long long v = 0;
      for (auto it = p.rbegin(); it != p.rend(); ++it) v = (v * x + *it) % q;
      CHECK(v != 0);
    }
  }
}

TEST_CASE("reduction is canonical") {
  // zeta_3^2 = -1 - zeta_3
  CHECK(CycElt::zeta(3, 2) == CycElt::from_terms(3, {{-1, 0}, {-1, 1}}));
  // 1 + zeta + ... + zeta^4 = 0 at N = 5
  CHECK(CycElt::from_powers(5, {1, 1, 1, 1, 1}).is_zero());
  CHECK(CycElt::zeta(7, 7) == CycElt(7, Rational(1)));
  CHECK(CycElt::zeta(7, -1) == CycElt::zeta(7, 6));
}

TEST_CASE("galois action") {
  CHECK(galois_apply(GaloisAut(2, 5), CycElt::zeta(5)) == CycElt::zeta(5, 2));
  const CycElt one_plus = CycElt::from_terms(3, {{1, 0}, {1, 1}});
  CHECK(galois_apply(GaloisAut(-1, 3), one_plus) == -CycElt::zeta(3, 1));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const CycElt z = random_integral(7, rng);
    CHECK(z.galois(2).galois(3) == z.galois(6));
    CHECK(galois_apply(GaloisAut(2, 7) * GaloisAut(3, 7), z) == z.galois(6));
    CHECK(z.conj().is_integral());
  }
  CHECK_THROWS(GaloisAut(2, 6));
  CHECK_THROWS(galois_apply(GaloisAut(2, 5), CycElt::zeta(7)));
}

TEST_CASE("embedding") {
  PrecisionGuard guard(40);
  const BigReal tol("1e-35");
  const BigComplex i = embed(CycElt::zeta(4), 128);
  CHECK(close(i.re, 0, tol));
  CHECK(close(i.im, 1, tol));

  const BigComplex w = embed(CycElt::from_terms(3, {{1, 0}, {1, 1}}), 128);
  CHECK(close(w.re, BigReal("0.5"), tol));
  CHECK(close(w.im, boost::multiprecision::sqrt(BigReal(3)) / 2, tol));

  BigComplex sum;
  for (int h : unit_residues(12)) sum += embed(CycElt::zeta(12).galois(h), 128);
  CHECK(close(abs(sum), 0, tol));

  std::mt19937 rng(11);
  for (int n : {5, 8, 9, 12}) {
    const CycElt z = random_integral(n, rng);
    const BigComplex ez = embed(z, 128);
    const BigComplex ec = embed(z.conj(), 128);
    CHECK(close(ec.re, ez.re, tol));
    CHECK(close(ec.im, -ez.im, tol));
    const BigComplex zz = embed(z * z.conj(), 128);
    CHECK(close(zz.re, norm(ez), tol * 100));
    CHECK(close(zz.im, 0, tol * 100));
  }
}

TEST_CASE("norms and traces") {
  CHECK(elt_norm(CycElt::from_terms(4, {{1, 0}, {-2, 1}})) == 5);
  CHECK(elt_norm(CycElt(5, Rational(2))) == 16);
  CHECK(elt_norm(CycElt::from_terms(5, {{1, 0}, {-1, 1}})) == 5);
  CHECK(elt_norm(CycElt::from_terms(7, {{1, 0}, {-1, 1}})) == 7);
  CHECK(elt_trace(CycElt::zeta(12)) == 0);
  CHECK(elt_trace(CycElt::zeta(5)) == -1);

  std::mt19937 rng(3);
  for (int n : {5, 7, 12}) {
    for (int trial = 0; trial < 5; ++trial) {
      const CycElt z = random_integral(n, rng), w = random_integral(n, rng);
      CHECK(elt_norm(z * w) == elt_norm(z) * elt_norm(w));
    }
  }
}

TEST_CASE("discriminant") {
  CHECK(disc_abs(3) == 3);
  CHECK(disc_abs(4) == 4);
  CHECK(disc_abs(5) == 125);
  CHECK(disc_abs(12) == 144);
  CHECK(disc_abs(9) == BigInt(19683));
  // |disc| = |N(Phi'(zeta))| for the power basis
  for (int n : {5, 7, 8, 9, 10, 12}) {
    const IntPoly p = cyclotomic_poly(n);
    std::vector<Rational> deriv;
    for (std::size_t k = 1; k < p.size(); ++k) deriv.emplace_back(static_cast<long long>(k) * p[k]);
    const Rational nd = elt_norm(CycElt::from_powers(n, deriv));
    CHECK(boost::multiprecision::abs(nd) == Rational(disc_abs(n)));
  }
}
