#pragma once

#include "dimer/model.hpp"
#include "dimer/thermal.hpp"

namespace dimer {

// Candidate concurrence branches of an X state:
//   C1 = |rho14| - sqrt(rho22 rho33),  C2 = |rho23| - sqrt(rho11 rho44).
struct ConcurrencePair {
  double C1 = 0.0;
  double C2 = 0.0;
};

ConcurrencePair concurrence_branches(const XState& x);

/// 2 max{C1, C2, 0}.
double concurrence_x(const XState& x);

/// Wootters concurrence of a general two-qubit state, max{0, l1 - l2 - l3 - l4},
/// with l_i the singular values of W^T (sy x sy) W for rho = W W^dagger.
/// Throws InvalidState if rho is not a density matrix within tolerance.
double concurrence_wootters(const DensityMatrix4& rho);

/// Sum of the magnitudes of the negative eigenvalues of the partial transpose
/// over the second qubit (0.5 for a Bell state).
double negativity(const DensityMatrix4& rho);

/// Horodecki M(rho): sum of the two largest eigenvalues of T^T T with
/// T_ij = Tr[rho s_i x s_j]. The CHSH inequality is violated iff M > 1.
double chsh_parameter(const DensityMatrix4& rho);

DensityMatrix4 partial_transpose(const DensityMatrix4& rho);

/// Throws InvalidState unless rho is Hermitian, unit-trace and PSD to `tol`.
void validate_density_matrix(const DensityMatrix4& rho, double tol = 1e-10);

}  // namespace dimer
