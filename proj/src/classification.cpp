#include "dimer/classification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

Category flipped(Category c) {
  return c == Category::symmetric ? Category::antisymmetric : Category::symmetric;
}

// log(sinh(x)) for x >= 0; -inf at x == 0.
double log_sinh(double x) {
  if (x < 20.0) return std::log(std::sinh(x));
  return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x));
}

// e^x - e^y - e^z without intermediate overflow.
double exp_difference(double x, double y, double z) {
  const double m = std::max({x, y, z});
  const double s = std::exp(x - m) - std::exp(y - m) - std::exp(z - m);
  if (s == 0.0) return 0.0;
  const double log_mag = m + std::log(std::abs(s));
  const double mag = std::exp(log_mag);  // inf if beyond double range
  return s > 0.0 ? mag : -mag;
}

}  // namespace

TorusInvariants torus_invariants(const DimerSpec& spec) {
  const GeneralCouplings g = compile_spec(spec);
  return {g.J * g.J + g.D * g.D, g.r * g.r + g.K * g.K, g.J_zz, spec.category};
}

bool same_class(const DimerSpec& a, const DimerSpec& b, double tol) {
  const TorusInvariants ia = torus_invariants(a);
  const TorusInvariants ib = torus_invariants(b);
  return ia.category == ib.category && std::abs(ia.J_zz - ib.J_zz) <= tol &&
         std::abs(ia.alpha - ib.alpha) <= tol && std::abs(ia.beta - ib.beta) <= tol;
}

DimerSpec dual_map(const DimerSpec& spec) {
  DimerSpec d = spec;
  d.category = flipped(spec.category);
  const Exchange& c = spec.couplings;
  d.couplings = Exchange{c.r, c.K, c.J, c.D, 0.0 - c.J_zz};
  return d;
}

Matrix4c flip_second_spin(const Matrix4c& rho) {
  // Basis permutation |a b> -> |a, 1-b>.
  constexpr int perm[4] = {1, 0, 3, 2};
  Matrix4c out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = rho(perm[i], perm[j]);
  return out;
}

bool is_dual_pair(const DimerSpec& a, const DimerSpec& b, double tol) {
  const TorusInvariants ia = torus_invariants(a);
  const TorusInvariants ib = torus_invariants(b);
  return ia.category != ib.category && std::abs(ia.J_zz + ib.J_zz) <= tol &&
         std::abs(ia.alpha - ib.beta) <= tol && std::abs(ia.beta - ib.alpha) <= tol;
}

std::vector<DimerSpec> sample_class(const TorusInvariants& inv, std::size_t n,
                                    std::uint64_t seed, SamplingMode mode) {
  if (n == 0) throw InvalidParameter("sample_class: n must be at least 1");
  if (!(inv.alpha >= 0.0) || !(inv.beta >= 0.0) || !std::isfinite(inv.alpha) ||
      !std::isfinite(inv.beta) || !std::isfinite(inv.J_zz)) {
    throw InvalidParameter("sample_class: radii must be finite and non-negative");
  }
  const double radius_jd = std::sqrt(inv.alpha);
  const double radius_rk = std::sqrt(inv.beta);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  // Fractional part of the golden ratio; fills the second circle without
  // repeating the first one's spacing.
  constexpr double kronecker_step = std::numbers::phi - 1.0;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, two_pi);

  std::vector<DimerSpec> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a = 0.0;
    double b = 0.0;
    if (mode == SamplingMode::grid) {
      a = two_pi * static_cast<double>(k) / static_cast<double>(n);
      const double frac = static_cast<double>(k) * kronecker_step;
      b = two_pi * (frac - std::floor(frac));
    } else {
      a = angle(rng);
      b = angle(rng);
    }
    DimerSpec s;
    s.category = inv.category;
    s.convention = Convention::pauli;
    s.B = 0.0;
    s.couplings = Exchange{radius_jd * std::cos(a), radius_jd * std::sin(a),
                           radius_rk * std::cos(b), radius_rk * std::sin(b), inv.J_zz};
    out.push_back(s);
  }
  return out;
}

DualityResiduals duality_residuals(const DimerSpec& spec, double T) {
  if (!std::isfinite(T)) throw InvalidParameter("duality_residuals: non-finite temperature");
  if (T <= 0.0) throw DomainError("duality_residuals: temperature must be positive");
  const GeneralCouplings g = compile_spec(spec);
  const DerivedAngles a = derived_quantities(g);

  constexpr double neg_inf = -std::numeric_limits<double>::infinity();
  const double sin1 = std::sin(a.vartheta);
  const double sin2 = std::sin(a.theta);
  const double log_p =
      (a.epsilon1 > 0.0 && sin1 > 0.0) ? log_sinh(a.epsilon1 / T) + std::log(sin1) : neg_inf;
  const double log_q =
      (a.epsilon2 > 0.0 && sin2 > 0.0) ? log_sinh(a.epsilon2 / T) + std::log(sin2) : neg_inf;
  const double zz = 2.0 * g.J_zz / T;

  const double p_term = -zz + 2.0 * log_p;  // log(e^{-2Jzz/T} p^2)
  const double q_term = zz + 2.0 * log_q;   // log(e^{2Jzz/T} q^2)
  return {exp_difference(p_term, q_term, zz), exp_difference(q_term, p_term, -zz)};
}

}  // namespace dimer
