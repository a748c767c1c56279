#include "fermat/regulator.hpp"

#include <stdexcept>

#include "fermat/cyclo.hpp"
#include "fermat/errors.hpp"
#include "fermat/hyperg.hpp"

namespace fermat {

namespace {

unsigned bits_to_digits(unsigned bits) { return static_cast<unsigned>(bits / 3.3219280948873623) + 12; }

// sin(k pi / N)
BigReal sin_frac(long long k, int n) { return boost::multiprecision::sin(big_pi() * k / n); }

}  // namespace

BigReal abs_det(const MatrixX<BigReal>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("abs_det: matrix must be square");
  if (m.rows() == 0) return BigReal(1);
  return boost::multiprecision::abs(BigReal(m.partialPivLu().determinant()));
}

BigReal d_const(int n, unsigned prec) {
  if (n < 3) throw std::invalid_argument("d_const: N must be >= 3");
  PrecisionGuard guard(bits_to_digits(prec));
  const int g = euler_phi(n) / 2;
  std::vector<int> hs;
  for (int h : unit_residues(n))
    if (2 * h < n) hs.push_back(h);
  MatrixX<BigReal> m(g, g);
  for (int i = 0; i < g; ++i)
    for (int k = 1; k <= g; ++k) m(i, k - 1) = 2 * boost::multiprecision::sin(2 * big_pi() * hs[i] * k / n);
  return abs_det(m);
}

RowCoefficient row_coefficient(const FermatIndex& idx, ElementKind element, int h, unsigned prec) {
  PrecisionGuard guard(bits_to_digits(prec));
  const int n = idx.N();
  const int ha = angle(static_cast<long long>(h) * idx.a(), n);
  const int hb = angle(static_cast<long long>(h) * idx.b(), n);
  const int hc = angle(static_cast<long long>(h) * idx.c(), n);
  const bool odd = n % 2 != 0;
  switch (element) {
    case ElementKind::E:
      return {BigReal(1), ha, hb};
    case ElementKind::E_ALPHA: {
      BigReal ratio = sin_frac(hc, n) / sin_frac(ha, n);
      if (odd) return {(hb % 2 == 0 ? ratio : BigReal(-ratio)), hc, hb};
      if (idx.b() % 2 != 0) throw std::invalid_argument("row_coefficient: e_alpha needs b even for even N");
      return {BigReal(2 * alpha_trace(idx, h)) * ratio, hc, hb};
    }
    case ElementKind::E_BETA: {
      BigReal ratio = sin_frac(hc, n) / sin_frac(hb, n);
      if (odd) return {(ha % 2 == 0 ? ratio : BigReal(-ratio)), ha, hc};
      if (idx.a() % 2 != 0) throw std::invalid_argument("row_coefficient: e_beta needs a even for even N");
      return {BigReal(2 * beta_trace(idx, h)) * ratio, ha, hc};
    }
  }
  throw std::invalid_argument("row_coefficient: unknown element");
}

RegMatrix reg_matrix(const FermatIndex& idx, unsigned prec) {
  RegMatrix out{element_set(idx), h_set(idx), {}};
  PrecisionGuard guard(bits_to_digits(prec));
  const auto g = static_cast<Eigen::Index>(out.cols.size());
  out.entries.resize(g, g);
  for (Eigen::Index i = 0; i < g; ++i) {
    for (Eigen::Index j = 0; j < g; ++j) {
      const RowCoefficient rc = row_coefficient(idx, out.rows[i].kind, out.cols[j], prec);
      out.entries(i, j) = rc.scalar * f_val(idx.N(), rc.fa, rc.fb, prec);
    }
  }
  return out;
}

BigReal r_value(const FermatIndex& idx, unsigned prec) {
  const RegMatrix m = reg_matrix(idx, prec);
  PrecisionGuard guard(bits_to_digits(prec));
  const BigReal det = abs_det(m.entries);
  if (det < pow2_neg(static_cast<long>(prec / 2)))
    throw DegenerateRegulator("regulator determinant vanishes numerically for " + idx.to_string());
  const int g = idx.g();
  const BigReal scale = boost::multiprecision::pow(2 * big_pi() * idx.N(), g);
  return d_const(idx.N(), prec) / scale * det;
}

}  // namespace fermat
