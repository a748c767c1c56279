#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "fermat/cyclo.hpp"
#include "fermat/lattice.hpp"
#include "fermat/regulator.hpp"
#include "fermat/verify.hpp"

using namespace fermat;

namespace {

constexpr unsigned kPrec = 128;

// kappa_n - kappa_{c-n}, divided by `div` (exactly).
IntVector kappa_minus(const FermatIndex& idx, int n, int div = 1) {
  IntVector v = kappa_map(idx.N(), n) - kappa_map(idx.N(), static_cast<long long>(idx.c()) - n);
  for (Eigen::Index i = 0; i < v.size(); ++i) REQUIRE(v(i) % div == 0);
  return v / div;
}

IntMatrix columns(const std::vector<IntVector>& vs) {
  IntMatrix m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j];
  return m;
}

struct ReferenceRow {
  int n, a, b;
  std::vector<std::pair<int, int>> basis;  // kappa_k^- / d as (k, d)
  double d_over_sqrt;                      // D^{ab} = d_over_sqrt * sqrt(root)
  int root;
};

// Bases and period determinants as listed in the reference table. The (6,1,2)
// basis is listed there as kappa_1^-/2, which is not integral (kappa_1^- =
// kappa_0 for that index); kappa_1^- itself is the generator.
const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows{
      {3, 1, 1, {{0, 1}}, 6, 3},           {4, 1, 1, {{0, 2}}, 4, 1},
      {4, 1, 2, {{0, 1}}, 8, 1},           {6, 1, 1, {{0, 1}}, 2, 3},
      {6, 1, 2, {{1, 1}}, 2, 3},           {6, 1, 3, {{0, 1}}, 2, 3},
      {6, 1, 4, {{0, 1}}, 2, 3},           {6, 2, 3, {{0, 1}}, 4, 3},
      {5, 1, 1, {{0, 1}, {1, 1}}, 100, 1}, {10, 1, 2, {{0, 1}, {1, 2}}, 10, 1},
      {10, 1, 4, {{0, 2}, {1, 1}}, 10, 1}, {10, 1, 6, {{0, 1}, {1, 1}}, 20, 1},
      {10, 2, 5, {{0, 1}, {1, 1}}, 80, 1}, {12, 1, 2, {{0, 1}, {1, 1}}, 8, 3},
      {12, 1, 6, {{0, 1}, {1, 1}}, 32, 3}, {12, 2, 3, {{0, 1}, {2, 1}}, 16, 3},
      {7, 1, 2, {{0, 1}, {1, 1}, {5, 1}}, 392, 7}, {9, 1, 2, {{0, 1}, {1, 1}, {2, 1}}, 216, 3},
  };
  return rows;
}

IntMatrix reference_basis(const ReferenceRow& r) {
  const FermatIndex idx(r.n, r.a, r.b);
  std::vector<IntVector> vs;
  for (auto [k, d] : r.basis) vs.push_back(kappa_minus(idx, k, d));
  return columns(vs);
}

// Period determinant in long double straight from the pairing formula.
long double oracle_period_det(const FermatIndex& idx, const IntMatrix& basis) {
  const int n = idx.N();
  const auto hs = h_set(idx);
  const long double pi = std::acos(-1.0L);
  auto zeta = [&](long long k) { return std::polar(1.0L, 2 * pi * static_cast<long double>(k) / n); };
  const auto g = static_cast<Eigen::Index>(hs.size());
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> m(g, g);
  for (Eigen::Index j = 0; j < g; ++j) {
    const long long h = hs[static_cast<std::size_t>(j)];
    const auto w = (1.0L - zeta(h * idx.a())) * (1.0L - zeta(h * idx.b()));
    for (Eigen::Index i = 0; i < g; ++i) {
      std::complex<long double> acc = 0;
      for (Eigen::Index k = 0; k < basis.rows(); ++k) acc += static_cast<long double>(basis(k, i)) * zeta(h * k) * w;
      m(i, j) = 2 * acc.imag();
    }
  }
  return std::fabs(m.determinant());
}

BigReal table_value(const ReferenceRow& r) {
  return BigReal(r.d_over_sqrt) * boost::multiprecision::sqrt(BigReal(r.root));
}

}  // namespace

TEST_CASE("kappa map") {
  for (int n : {3, 5, 7, 9, 10, 12}) {
    const int dim = euler_phi(n);
    for (int k = 0; k < dim; ++k) CHECK(kappa_map(n, k) == IntVector::Unit(dim, k));
    // Phi_N(t) t^s vanishes, so the same combination of kappa vectors does
    const IntPoly phi = cyclotomic_poly(n);
    for (int s = 0; s < n; ++s) {
      IntVector acc = IntVector::Zero(dim);
      for (std::size_t i = 0; i < phi.size(); ++i) acc += phi[i] * kappa_map(n, s + static_cast<long long>(i));
      CHECK(acc.isZero());
    }
  }
}

TEST_CASE("F_infty") {
  for (const auto& row : table1_rows()) {
    const FermatIndex idx(row.n, row.a, row.b);
    const IntMatrix m = f_infty_matrix(idx);
    CHECK(m * m == IntMatrix::Identity(m.rows(), m.cols()));
    // S sends kappa_n to kappa_{n+1}; F_infty S = S^{-1} F_infty
    IntMatrix s(m.rows(), m.cols()), s_inv(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      s.col(j) = kappa_map(row.n, j + 1);
      s_inv.col(j) = kappa_map(row.n, j - 1);
    }
    CHECK(s * s_inv == IntMatrix::Identity(m.rows(), m.cols()));
    CHECK(m * s == s_inv * m);
  }
  const FermatIndex i10(10, 1, 2);
  const IntMatrix m = f_infty_matrix(i10);
  CHECK(m * kappa_map(10, 1) == -kappa_map(10, 1));
  CHECK(kappa_map(10, 6) == -kappa_map(10, 1));
  const IntVector k4 = kappa_map(10, 3) - kappa_map(10, 2) + kappa_map(10, 1) - kappa_map(10, 0);
  CHECK(m * kappa_map(10, 3) == k4);
  CHECK(kappa_map(10, 4) == k4);
}

TEST_CASE("integer kernel") {
  IntMatrix a(2, 3);
  a << 2, 4, 6, 1, 3, 5;
  const IntMatrix k = integer_kernel(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).isZero());
  CHECK(std::gcd(std::gcd(k(0, 0), k(1, 0)), k(2, 0)) == 1);

  IntMatrix x(2, 2), y(2, 2);
  x << 1, 0, 0, 2;
  y << 1, 1, 0, 2;
  CHECK(same_lattice(x, y));
  y << 1, 1, 0, 1;
  CHECK_FALSE(same_lattice(x, y));
}

TEST_CASE("T lattice agrees with the reference bases") {
  for (const auto& r : reference_rows()) {
    const FermatIndex idx(r.n, r.a, r.b);
    const IntMatrix basis = t_lattice_basis(idx);
    CAPTURE(idx.to_string());
    CHECK(basis.cols() == idx.g());
    const IntMatrix m = f_infty_matrix(idx);
    CHECK((m * basis + basis).isZero());
    CHECK(same_lattice(basis, reference_basis(r)));
  }
  const FermatIndex i10(10, 1, 2);
  IntVector k0 = kappa_map(10, 0) + kappa_map(10, 2);
  CHECK(same_lattice(t_lattice_basis(i10), columns({k0, kappa_map(10, 1)})));
}

TEST_CASE("period pairing") {
  PrecisionGuard g(50);
  const FermatIndex idx(7, 1, 2);
  for (int h : h_set(idx))
    for (int n = 0; n < 7; ++n) {
      const BigComplex p = period_pairing(idx, kappa_minus(idx, n), h, kPrec);
      CHECK(p.re == 0);
      const CycElt z = CycElt::zeta(7, static_cast<long long>(h) * n) *
                       (CycElt(7, Rational(1)) - CycElt::zeta(7, static_cast<long long>(h) * idx.a())) *
                       (CycElt(7, Rational(1)) - CycElt::zeta(7, static_cast<long long>(h) * idx.b()));
      CHECK(boost::multiprecision::abs(p.im - 4 * embed(z, kPrec).im) < BigReal("1e-35"));
    }
  // F_infty-fixed vectors pair to zero
  const IntMatrix m = f_infty_matrix(idx);
  const IntMatrix fixed = integer_kernel(m - IntMatrix::Identity(m.rows(), m.cols()));
  for (Eigen::Index j = 0; j < fixed.cols(); ++j)
    for (int h : h_set(idx)) CHECK(boost::multiprecision::abs(period_pairing(idx, fixed.col(j), h, kPrec).im) < BigReal("1e-35"));
}

TEST_CASE("period determinants") {
  PrecisionGuard g(50);
  for (const auto& r : reference_rows()) {
    const FermatIndex idx(r.n, r.a, r.b);
    const BigReal d = period_det(idx, kPrec);
    CAPTURE(idx.to_string());
    // the computed basis and the reference basis span the same lattice
    CHECK(boost::multiprecision::abs(d - period_det(idx, reference_basis(r), kPrec)) < BigReal("1e-30"));
    const long double oracle = oracle_period_det(idx, reference_basis(r));
    CHECK(std::fabs(d.convert_to<long double>() - oracle) < 1e-12L * oracle);
  }
}

TEST_CASE("period determinants against the reference table") {
  PrecisionGuard g(50);
  for (const auto& r : reference_rows()) {
    const FermatIndex idx(r.n, r.a, r.b);
    CAPTURE(idx.to_string());
    const BigReal d = period_det(idx, kPrec);
    // For (6,1,3), (10,1,2), (10,1,4) the pairing formula applied to the
    // listed basis gives twice the listed value.
    const bool doubled = (r.n == 6 && r.b == 3 && r.a == 1) || (r.n == 10 && r.a == 1 && (r.b == 2 || r.b == 4));
    const BigReal expect = doubled ? 2 * table_value(r) : table_value(r);
    CHECK(boost::multiprecision::abs(d - expect) < BigReal("1e-30"));
  }
}

TEST_CASE("unimodular change of basis") {
  PrecisionGuard g(50);
  for (auto [n, a, b] : std::vector<std::tuple<int, int, int>>{{5, 1, 1}, {7, 1, 2}, {12, 2, 3}}) {
    const FermatIndex idx(n, a, b);
    const IntMatrix basis = t_lattice_basis(idx);
    IntMatrix u = IntMatrix::Identity(basis.cols(), basis.cols());
    for (Eigen::Index i = 0; i + 1 < u.cols(); ++i) u(i, i + 1) = 3 - i;
    u.col(0).swap(u.col(u.cols() - 1));
    CHECK(boost::multiprecision::abs(period_det(idx, basis, kPrec) - period_det(idx, basis * u, kPrec)) < BigReal("1e-30"));
  }
}

TEST_CASE("integral regulator") {
  PrecisionGuard g(50);
  for (auto [n, a, b] : std::vector<std::tuple<int, int, int>>{{3, 1, 1}, {5, 1, 1}, {12, 1, 6}}) {
    const FermatIndex idx(n, a, b);
    const BigReal expect = period_det(idx, kPrec) / d_const(n, kPrec) * r_value(idx, kPrec);
    CHECK(boost::multiprecision::abs(r_tilde(idx, kPrec) - expect) < BigReal("1e-30") * expect);
  }
}
