#pragma once

#include <array>

#include "dimer/model.hpp"

namespace dimer {

/// Gibbs state exp(-H/T)/Z of the X-shaped model. Only the six independent
/// entries are stored; rho41 = conj(rho14), rho32 = conj(rho23).
struct XState {
  double rho11 = 0.25;
  double rho22 = 0.25;
  double rho33 = 0.25;
  double rho44 = 0.25;
  cplx rho14{0.0, 0.0};
  cplx rho23{0.0, 0.0};
  // sqrt(rho11 rho44) and sqrt(rho22 rho33) evaluated before the diagonal
  // entries underflow; negative means "take them from the diagonal".
  double outer_geomean = -1.0;
  double inner_geomean = -1.0;
  double logZ_shifted = 0.0;  // log of the sum of weights exp(-(E - energy_shift)/T)
  double energy_shift = 0.0;  // lowest block energy
  double T = 0.0;

  [[nodiscard]] double log_partition() const { return logZ_shifted - energy_shift / T; }
  [[nodiscard]] Matrix4c matrix() const;
};

using DensityMatrix4 = Matrix4c;

struct BlockEnergies {
  double outer_plus;   // J_zz + epsilon1
  double outer_minus;  // J_zz - epsilon1
  double inner_plus;   // -J_zz + epsilon2
  double inner_minus;  // -J_zz - epsilon2

  [[nodiscard]] std::array<double, 4> as_array() const {
    return {outer_plus, outer_minus, inner_plus, inner_minus};
  }
};

BlockEnergies block_energies(const GeneralCouplings& g);

/// Closed-form Gibbs state. Weights are shifted by the lowest block energy so
/// the result is finite for every T > 0.
/// Throws DomainError for T <= 0 and InvalidParameter for non-finite input.
XState thermal_state(const GeneralCouplings& g, double T);

/// Tr exp(-H/T). Throws NumericError when the value overflows a double; use
/// log_partition_function in that regime.
double partition_function(const GeneralCouplings& g, double T);
double log_partition_function(const GeneralCouplings& g, double T);

/// Reference Gibbs state by dense Hermitian eigendecomposition of H.
DensityMatrix4 thermal_state_oracle(const Matrix4c& H, double T);

}  // namespace dimer
