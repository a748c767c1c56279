#pragma once

#include <vector>

#include "fermat/bigreal.hpp"
#include "fermat/index.hpp"

namespace fermat {

/// D_N = |det(zeta^{hn} - zeta^{-hn})| over units h with <h> < N/2 and n = 1..g.
BigReal d_const(int n, unsigned prec);

/// An entry of the regulator matrix: scalar * F_N^{fa, fb}.
struct RowCoefficient {
  BigReal scalar;
  int fa;
  int fb;
};

RowCoefficient row_coefficient(const FermatIndex& idx, ElementKind element, int h, unsigned prec);

struct RegMatrix {
  std::vector<ElementDescriptor> rows;
  std::vector<int> cols;  // h_set
  MatrixX<BigReal> entries;
};

/// Rows follow element_set, columns follow h_set; the E row is F_N^{ha,hb}.
RegMatrix reg_matrix(const FermatIndex& idx, unsigned prec);

/// R = D_N / ((2 pi)^g N^g) |det RegMatrix|.
BigReal r_value(const FermatIndex& idx, unsigned prec);

/// |det| of a square BigReal matrix via partial-pivot LU.
BigReal abs_det(const MatrixX<BigReal>& m);

}  // namespace fermat
