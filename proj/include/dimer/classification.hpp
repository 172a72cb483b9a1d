#pragma once

#include <cstdint>
#include <vector>

#include "dimer/model.hpp"

namespace dimer {

/// Quantities shared by every member of a toric entanglement class. Members
/// differ only by the phases of J + iD and r + iK, so a class is the torus with
/// radii sqrt(alpha) and sqrt(beta) in (J, D, r, K) space.
struct TorusInvariants {
  double alpha = 0.0;  // J^2 + D^2
  double beta = 0.0;   // r^2 + K^2
  double J_zz = 0.0;
  Category category = Category::symmetric;
};

inline constexpr double kDefaultClassTolerance = 1e-9;

/// Invariants in the Pauli convention (spin-convention specs are converted).
TorusInvariants torus_invariants(const DimerSpec& spec);

bool same_class(const DimerSpec& a, const DimerSpec& b, double tol = kDefaultClassTolerance);

/// Canonical dual: category flipped, (J, D, r, K, J_zz) -> (r, K, J, D, -J_zz),
/// B and convention kept. The dual Gibbs state is the original conjugated by
/// a bit flip on the second spin.
DimerSpec dual_map(const DimerSpec& spec);

/// (I x X) rho (I x X): bit flip on the second spin.
Matrix4c flip_second_spin(const Matrix4c& rho);

bool is_dual_pair(const DimerSpec& a, const DimerSpec& b, double tol = kDefaultClassTolerance);

enum class SamplingMode {
  grid,     // phase of J + iD evenly spaced, phase of r + iK on a Kronecker sequence
  uniform,  // both phases uniform on [0, 2 pi) from the seeded generator
};

/// n Pauli-convention members of the class, all at B = 0.
/// Throws InvalidParameter for n == 0 or negative radii.
std::vector<DimerSpec> sample_class(const TorusInvariants& inv, std::size_t n,
                                    std::uint64_t seed, SamplingMode mode = SamplingMode::grid);

/// Residuals of the two critical-line equations at temperature T,
///   resI  = e^{-2Jzz/T} p^2 - e^{2Jzz/T} q^2 - e^{2Jzz/T}
///   resII = e^{2Jzz/T} q^2 - e^{-2Jzz/T} p^2 - e^{-2Jzz/T}
/// with p = sinh(eps1/T) sin(vartheta), q = sinh(eps2/T) sin(theta).
/// resI > 0 iff C1 > 0 and resII > 0 iff C2 > 0. Evaluated from logarithms;
/// a value beyond double range comes back as a signed infinity, never NaN.
struct DualityResiduals {
  double resI = 0.0;
  double resII = 0.0;
};

DualityResiduals duality_residuals(const DimerSpec& spec, double T);

}  // namespace dimer
