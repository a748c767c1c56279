#pragma once

#include <vector>

#include "fermat/bigreal.hpp"
#include "fermat/index.hpp"

namespace fermat {

/// kappa_n in the basis kappa_0..kappa_{2g-1}: t^n reduced modulo Phi_N.
IntVector kappa_map(int n, long long k);

/// F_infty kappa_n = kappa_{c-n}, as a 2g x 2g integer matrix acting on columns.
IntMatrix f_infty_matrix(const FermatIndex& idx);

/// A basis (as columns) of the integer kernel of m. The basis vectors come
/// from a unimodular transform, so they span a saturated sublattice.
IntMatrix integer_kernel(const IntMatrix& m);

/// Basis of T = ker(F_infty + 1) in kappa coordinates, one vector per column.
IntMatrix t_lattice_basis(const FermatIndex& idx);

/// Whether the column spans of two integer matrices coincide.
bool same_lattice(const IntMatrix& x, const IntMatrix& y);

/// int_t (w~^{ha,hb} - w~^{-ha,-hb}) = 2i Im(sum_n t_n zeta^{hn} (1 - zeta^{ha})(1 - zeta^{hb})).
BigComplex period_pairing(const FermatIndex& idx, const IntVector& t, int h, unsigned prec);

/// |det| of the pairing between a lattice basis and the h_set columns.
BigReal period_det(const FermatIndex& idx, const IntMatrix& basis, unsigned prec);
BigReal period_det(const FermatIndex& idx, unsigned prec);

/// R~ = (D^{a,b} / D_N) R.
BigReal r_tilde(const FermatIndex& idx, unsigned prec);

}  // namespace fermat
