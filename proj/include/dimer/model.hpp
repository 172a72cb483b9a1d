#pragma once

#include <complex>

#include <Eigen/Dense>

namespace dimer {

using cplx = std::complex<double>;
using Matrix4c = Eigen::Matrix<cplx, 4, 4>;
using Matrix2c = Eigen::Matrix<cplx, 2, 2>;

/// Couplings of the traceless two-qubit model
///
///   H = (w+/2) sz1 + (w-/2) sz2 + sigma1 . Jmat . sigma2,   w+- = omega +- delta,
///
/// in the Pauli (sigma) convention with hbar = k_B = 1. The in-plane block of
/// Jmat is parametrized by J (isotropic XY exchange), D (Dzyaloshinskii-Moriya),
/// r (XY anisotropy) and K (symmetric off-diagonal exchange).
struct GeneralCouplings {
  double J = 0.0;
  double D = 0.0;
  double r = 0.0;
  double K = 0.0;
  double J_zz = 0.0;
  double omega = 0.0;
  double delta = 0.0;

  [[nodiscard]] double J_xx() const { return 0.5 * (J + r); }
  [[nodiscard]] double J_yy() const { return 0.5 * (J - r); }
  [[nodiscard]] double J_xy() const { return 0.5 * (K - D); }
  [[nodiscard]] double J_yx() const { return 0.5 * (K + D); }
  [[nodiscard]] double omega_plus() const { return omega + delta; }
  [[nodiscard]] double omega_minus() const { return omega - delta; }

  friend bool operator==(const GeneralCouplings&, const GeneralCouplings&) = default;
};

enum class Category { symmetric, antisymmetric };
enum class Convention { pauli, spin };

/// In-plane and zz exchange of a dimer, expressed in the convention of the
/// owning DimerSpec. J_zz is the literal coefficient of the zz term in both
/// categories.
struct Exchange {
  double J = 0.0;
  double D = 0.0;
  double r = 0.0;
  double K = 0.0;
  double J_zz = 0.0;

  friend bool operator==(const Exchange&, const Exchange&) = default;
};

/// A symmetric (parallel moments, omega = B) or antisymmetric (antiparallel
/// moments, delta = B) dimer in a uniform field B.
///
/// With Convention::spin the exchange multiplies spin operators s = sigma/2,
/// so bilinear couplings are four times their Pauli values while B keeps its
/// meaning: the Zeeman term is B (s_z1 +- s_z2) = (B/2)(sz1 +- sz2).
struct DimerSpec {
  Category category = Category::symmetric;
  Exchange couplings;
  double B = 0.0;
  Convention convention = Convention::pauli;

  friend bool operator==(const DimerSpec&, const DimerSpec&) = default;
};

struct DerivedAngles {
  double epsilon1 = 0.0;  // sqrt(omega^2 + r^2 + K^2), outer {|00>,|11>} block
  double epsilon2 = 0.0;  // sqrt(delta^2 + J^2 + D^2), inner {|01>,|10>} block
  double vartheta = 0.0;  // polar angle of the outer block, in [0, pi]
  double theta = 0.0;     // polar angle of the inner block, in [0, pi]
  double phi1 = 0.0;      // phase of r + iK
  double phi2 = 0.0;      // phase of J + iD
};

/// Converts spin-operator couplings sum_ab A_ab s1_a s2_b + c_zz s1_z s2_z
/// plus fields h, dh (w+- = h +- dh) to the Pauli parametrization.
/// Throws InvalidParameter on non-finite input.
GeneralCouplings couplings_from_spin_convention(double a_xx, double a_yy, double a_xy,
                                                double a_yx, double c_zz, double h, double dh);

/// Pauli-convention couplings of a dimer spec: omega = B, delta = 0 for a
/// symmetric dimer, omega = 0, delta = B for an antisymmetric one.
GeneralCouplings compile_spec(const DimerSpec& spec);

DerivedAngles derived_quantities(const GeneralCouplings& g);

/// Hamiltonian in the ordered basis {|00>, |01>, |10>, |11>}.
Matrix4c hamiltonian_matrix(const GeneralCouplings& g);

void require_finite(const GeneralCouplings& g);

const char* to_string(Category c);
const char* to_string(Convention c);

}  // namespace dimer
