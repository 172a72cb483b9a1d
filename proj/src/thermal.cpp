#include "dimer/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

void require_temperature(double T, const char* where) {
  if (std::isnan(T) || std::isinf(T)) {
    throw InvalidParameter(std::string(where) + ": non-finite temperature");
  }
  if (T <= 0.0) {
    throw DomainError(std::string(where) + ": temperature must be positive");
  }
}

}  // namespace

Matrix4c XState::matrix() const {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = rho11;
  m(1, 1) = rho22;
  m(2, 2) = rho33;
  m(3, 3) = rho44;
  m(0, 3) = rho14;
  m(3, 0) = std::conj(rho14);
  m(1, 2) = rho23;
  m(2, 1) = std::conj(rho23);
  return m;
}

BlockEnergies block_energies(const GeneralCouplings& g) {
  const DerivedAngles a = derived_quantities(g);
  return {g.J_zz + a.epsilon1, g.J_zz - a.epsilon1, -g.J_zz + a.epsilon2, -g.J_zz - a.epsilon2};
}

XState thermal_state(const GeneralCouplings& g, double T) {
  require_temperature(T, "thermal_state");
  const DerivedAngles a = derived_quantities(g);
  const BlockEnergies e = block_energies(g);
  const double e_min = std::min(e.outer_minus, e.inner_minus);

  // Per block: w_minus is the weight of the lower level, and the level
  // splitting enters through expm1 so that small epsilon/T stays accurate.
  const double w1_minus = std::exp(-(e.outer_minus - e_min) / T);
  const double w2_minus = std::exp(-(e.inner_minus - e_min) / T);
  const double split1 = -std::expm1(-2.0 * a.epsilon1 / T);  // 1 - exp(-2 eps1/T)
  const double split2 = -std::expm1(-2.0 * a.epsilon2 / T);
  const double w1_plus = w1_minus * (1.0 - split1);
  const double w2_plus = w2_minus * (1.0 - split2);

  // e^{-Jzz/T} cosh(eps1/T) and e^{-Jzz/T} sinh(eps1/T) in shifted units.
  const double cosh1 = 0.5 * (w1_minus + w1_plus);
  const double sinh1 = 0.5 * w1_minus * split1;
  const double cosh2 = 0.5 * (w2_minus + w2_plus);
  const double sinh2 = 0.5 * w2_minus * split2;

  const double z_shifted = 2.0 * (cosh1 + cosh2);

  XState x;
  x.T = T;
  x.energy_shift = e_min;
  x.logZ_shifted = std::log(z_shifted);

  const double c1 = std::cos(a.vartheta);
  const double c2 = std::cos(a.theta);
  x.rho11 = (cosh1 - sinh1 * c1) / z_shifted;
  x.rho44 = (cosh1 + sinh1 * c1) / z_shifted;
  x.rho22 = (cosh2 - sinh2 * c2) / z_shifted;
  x.rho33 = (cosh2 + sinh2 * c2) / z_shifted;
  x.rho14 = -std::polar(sinh1 * std::sin(a.vartheta) / z_shifted, -a.phi1);
  x.rho23 = -std::polar(sinh2 * std::sin(a.theta) / z_shifted, -a.phi2);

  // cosh^2 - sinh^2 cos^2 = w^2 [exp(-2 eps/T) + (s sin / 2)^2] with s the split.
  const double h1 = 0.5 * split1 * std::sin(a.vartheta);
  const double h2 = 0.5 * split2 * std::sin(a.theta);
  x.outer_geomean = w1_minus * std::hypot(std::exp(-a.epsilon1 / T), h1) / z_shifted;
  x.inner_geomean = w2_minus * std::hypot(std::exp(-a.epsilon2 / T), h2) / z_shifted;
  return x;
}

double log_partition_function(const GeneralCouplings& g, double T) {
  return thermal_state(g, T).log_partition();
}

double partition_function(const GeneralCouplings& g, double T) {
  const double log_z = log_partition_function(g, T);
  if (log_z > std::log(std::numeric_limits<double>::max())) {
    throw NumericError("partition_function: overflow, use log_partition_function");
  }
  return std::exp(log_z);
}

DensityMatrix4 thermal_state_oracle(const Matrix4c& H, double T) {
  require_temperature(T, "thermal_state_oracle");
  if (!H.allFinite()) {
    throw InvalidParameter("thermal_state_oracle: non-finite Hamiltonian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(H);
  if (solver.info() != Eigen::Success) {
    throw NumericError("thermal_state_oracle: eigensolver did not converge");
  }
  const Eigen::Vector4d& energies = solver.eigenvalues();
  const double e_min = energies.minCoeff();
  Eigen::Vector4d weights;
  for (int i = 0; i < 4; ++i) {
    weights(i) = std::exp(-(energies(i) - e_min) / T);
  }
  weights /= weights.sum();
  const Matrix4c& v = solver.eigenvectors();
  Matrix4c rho = v * weights.cast<cplx>().asDiagonal() * v.adjoint();
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace dimer
