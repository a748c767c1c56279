#include "fermat/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "fermat/cyclo.hpp"
#include "fermat/errors.hpp"
#include "fermat/regulator.hpp"

namespace fermat {

namespace {

unsigned bits_to_digits(unsigned bits) { return static_cast<unsigned>(bits / 3.3219280948873623) + 12; }

using BigMatrix = std::vector<std::vector<BigInt>>;

// Row-reduces `rows` by unimodular integer operations, applying the same
// operations to `track`. Returns the number of nonzero rows left on top.
std::size_t integer_row_echelon(BigMatrix& rows, BigMatrix& track) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < nc && pivot_row < nr; ++col) {
    // Euclid on column `col` among rows pivot_row..nr-1
    while (true) {
      std::size_t best = nr;
      for (std::size_t r = pivot_row; r < nr; ++r)
        if (rows[r][col] != 0 && (best == nr || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
      if (best == nr) break;
      std::swap(rows[pivot_row], rows[best]);
      std::swap(track[pivot_row], track[best]);
      bool reduced = true;
      for (std::size_t r = pivot_row + 1; r < nr; ++r) {
        if (rows[r][col] == 0) continue;
        const BigInt qt = rows[r][col] / rows[pivot_row][col];
        for (std::size_t j = 0; j < nc; ++j) rows[r][j] -= qt * rows[pivot_row][j];
        for (std::size_t j = 0; j < track[r].size(); ++j) track[r][j] -= qt * track[pivot_row][j];
        if (rows[r][col] != 0) reduced = false;
      }
      if (reduced) {
        ++pivot_row;
        break;
      }
    }
  }
  return pivot_row;
}

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(static_cast<std::size_t>(m.rows()), std::vector<BigInt>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

BigMatrix identity(std::size_t n) {
  BigMatrix id(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// Integer rank via echelon form.
std::size_t integer_rank(const IntMatrix& m) {
  BigMatrix rows = to_big(m.transpose());
  BigMatrix track(rows.size());
  return integer_row_echelon(rows, track);
}

// Column Hermite-style normal form of the span, used for lattice equality.
BigMatrix lattice_echelon(const IntMatrix& m) {
  BigMatrix rows = to_big(m.transpose());  // generators as rows
  BigMatrix track(rows.size());
  const std::size_t rank = integer_row_echelon(rows, track);
  rows.resize(rank);
  // normalize: positive pivots and reduced entries above pivots
  std::size_t col = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    while (rows[r][col] == 0) ++col;
    if (rows[r][col] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t up = 0; up < r; ++up) {
      BigInt qt = rows[up][col] / rows[r][col];
      if (rows[up][col] - qt * rows[r][col] < 0) qt -= 1;
      for (std::size_t j = 0; j < rows[r].size(); ++j) rows[up][j] -= qt * rows[r][j];
    }
  }
  return rows;
}

}  // namespace

IntVector kappa_map(int n, long long k) {
  const auto& row = power_reduction(n, k);
  IntVector v(static_cast<Eigen::Index>(row.size()));
  for (std::size_t i = 0; i < row.size(); ++i) v(static_cast<Eigen::Index>(i)) = row[i];
  return v;
}

IntMatrix f_infty_matrix(const FermatIndex& idx) {
  const int n = idx.N();
  const int dim = euler_phi(n);
  IntMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) m.col(j) = kappa_map(n, static_cast<long long>(idx.c()) - j);
  return m;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const auto ncols = static_cast<std::size_t>(m.cols());
  BigMatrix rows = to_big(m.transpose());  // row i of A^T is column i of A
  BigMatrix track = identity(ncols);
  const std::size_t rank = integer_row_echelon(rows, track);
  IntMatrix basis(m.cols(), static_cast<Eigen::Index>(ncols - rank));
  for (std::size_t r = rank; r < ncols; ++r)
    for (std::size_t j = 0; j < ncols; ++j)
      basis(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(r - rank)) = track[r][j].convert_to<long long>();
  return basis;
}

IntMatrix t_lattice_basis(const FermatIndex& idx) {
  const IntMatrix m = f_infty_matrix(idx);
  const IntMatrix basis = integer_kernel(m + IntMatrix::Identity(m.rows(), m.cols()));
  if (basis.cols() != idx.g())
    throw RankMismatch("T lattice has rank " + std::to_string(basis.cols()) + ", expected " +
                       std::to_string(idx.g()) + " for " + idx.to_string());
  return basis;
}

bool same_lattice(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows() != y.rows()) return false;
  if (integer_rank(x) != integer_rank(y)) return false;
  return lattice_echelon(x) == lattice_echelon(y);
}

BigComplex period_pairing(const FermatIndex& idx, const IntVector& t, int h, unsigned prec) {
  const int n = idx.N();
  std::vector<Rational> powers(static_cast<std::size_t>(n), Rational(0));
  for (Eigen::Index k = 0; k < t.size(); ++k)
    powers[mod_floor(static_cast<long long>(h) * k, n)] += t(k);
  const CycElt one(n, Rational(1));
  const CycElt w = CycElt::from_powers(n, powers) * (one - CycElt::zeta(n, static_cast<long long>(h) * idx.a())) *
                   (one - CycElt::zeta(n, static_cast<long long>(h) * idx.b()));
  PrecisionGuard guard(bits_to_digits(prec));
  const BigComplex z = embed(w, prec + 16);
  return {BigReal(0), BigReal(2 * z.im)};
}

BigReal period_det(const FermatIndex& idx, const IntMatrix& basis, unsigned prec) {
  const std::vector<int> hs = h_set(idx);
  const auto g = static_cast<Eigen::Index>(hs.size());
  if (basis.cols() != g) throw RankMismatch("period_det: basis size differs from g");
  PrecisionGuard guard(bits_to_digits(prec));
  MatrixX<BigReal> m(g, g);
  for (Eigen::Index i = 0; i < g; ++i)
    for (Eigen::Index j = 0; j < g; ++j) m(i, j) = period_pairing(idx, basis.col(i), hs[j], prec).im;
  return abs_det(m);
}

BigReal period_det(const FermatIndex& idx, unsigned prec) { return period_det(idx, t_lattice_basis(idx), prec); }

BigReal r_tilde(const FermatIndex& idx, unsigned prec) {
  PrecisionGuard guard(bits_to_digits(prec));
  return period_det(idx, prec) / d_const(idx.N(), prec) * r_value(idx, prec);
}

}  // namespace fermat
