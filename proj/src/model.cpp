#include "dimer/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

void require_finite_values(std::initializer_list<double> values, const char* where) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw InvalidParameter(std::string(where) + ": non-finite coupling");
    }
  }
}

}  // namespace

void require_finite(const GeneralCouplings& g) {
  require_finite_values({g.J, g.D, g.r, g.K, g.J_zz, g.omega, g.delta}, "couplings");
}

GeneralCouplings couplings_from_spin_convention(double a_xx, double a_yy, double a_xy,
                                                double a_yx, double c_zz, double h,
                                                double dh) {
  require_finite_values({a_xx, a_yy, a_xy, a_yx, c_zz, h, dh}, "couplings_from_spin_convention");
  GeneralCouplings g;
  g.J = (a_xx + a_yy) / 4.0;
  g.r = (a_xx - a_yy) / 4.0;
  g.K = (a_xy + a_yx) / 4.0;
  g.D = (a_yx - a_xy) / 4.0;
  g.J_zz = c_zz / 4.0;
  g.omega = h;
  g.delta = dh;
  return g;
}

GeneralCouplings compile_spec(const DimerSpec& spec) {
  const Exchange& c = spec.couplings;
  require_finite_values({c.J, c.D, c.r, c.K, c.J_zz, spec.B}, "compile_spec");

  double omega = 0.0;
  double delta = 0.0;
  switch (spec.category) {
    case Category::symmetric:
      omega = spec.B;
      break;
    case Category::antisymmetric:
      delta = spec.B;
      break;
    default:
      throw InvalidParameter("compile_spec: unknown category");
  }

  switch (spec.convention) {
    case Convention::pauli:
      return GeneralCouplings{c.J, c.D, c.r, c.K, c.J_zz, omega, delta};
    case Convention::spin:
      // The spin-form Hamiltonian is the Pauli form with sigma -> s on every
      // bilinear term, i.e. tensor A = Jmat_spin, so Jmat_pauli = A / 4.
      return couplings_from_spin_convention(0.5 * (c.J + c.r), 0.5 * (c.J - c.r),
                                            0.5 * (c.K - c.D), 0.5 * (c.K + c.D), c.J_zz, omega,
                                            delta);
  }
  throw InvalidParameter("compile_spec: unknown convention");
}

DerivedAngles derived_quantities(const GeneralCouplings& g) {
  require_finite(g);
  DerivedAngles a;
  const double rk = std::hypot(g.r, g.K);
  const double jd = std::hypot(g.J, g.D);
  a.epsilon1 = std::hypot(g.omega, rk);
  a.epsilon2 = std::hypot(g.delta, jd);

  constexpr double half_pi = std::numbers::pi / 2.0;
  if (a.epsilon1 > 0.0) {
    a.vartheta = std::atan2(rk, g.omega);
    a.phi1 = (rk > 0.0) ? std::atan2(g.K, g.r) : 0.0;
  } else {
    a.vartheta = half_pi;
    a.phi1 = 0.0;
  }
  if (a.epsilon2 > 0.0) {
    a.theta = std::atan2(jd, g.delta);
    a.phi2 = (jd > 0.0) ? std::atan2(g.D, g.J) : 0.0;
  } else {
    a.theta = half_pi;
    a.phi2 = 0.0;
  }
  return a;
}

Matrix4c hamiltonian_matrix(const GeneralCouplings& g) {
  require_finite(g);
  Matrix4c h = Matrix4c::Zero();
  h(0, 0) = g.omega + g.J_zz;
  h(1, 1) = g.delta - g.J_zz;
  h(2, 2) = -g.delta - g.J_zz;
  h(3, 3) = -g.omega + g.J_zz;
  h(0, 3) = cplx(g.r, -g.K);
  h(3, 0) = cplx(g.r, g.K);
  h(1, 2) = cplx(g.J, -g.D);
  h(2, 1) = cplx(g.J, g.D);
  return h;
}

const char* to_string(Category c) {
  return c == Category::symmetric ? "symmetric" : "antisymmetric";
}

const char* to_string(Convention c) { return c == Convention::pauli ? "pauli" : "spin"; }

}  // namespace dimer
