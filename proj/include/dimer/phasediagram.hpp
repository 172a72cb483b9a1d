#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dimer/model.hpp"

namespace dimer {

enum class Branch { C1, C2 };

struct CriticalPoint {
  double B = 0.0;
  double Tc = 0.0;
  Branch branch = Branch::C2;
};

struct TransitionCurve {
  std::vector<CriticalPoint> points;  // sorted by B, then Tc
  double solver_tol = 0.0;
};

enum class Measure { concurrence, negativity, chsh };

/// values are stored B-major: value(i, j) is at (B_axis[i], T_axis[j]).
struct DiagramGrid {
  std::vector<double> B_axis;
  std::vector<double> T_axis;
  std::vector<double> values;

  [[nodiscard]] double value(std::size_t i, std::size_t j) const {
    return values[i * T_axis.size() + j];
  }
};

inline constexpr double kDefaultSolverTol = 1e-10;
inline constexpr std::size_t kDefaultScanPoints = 256;

std::vector<double> linspace(double lo, double hi, std::size_t n);
std::vector<double> logspace(double lo, double hi, std::size_t n);

/// [1e-3 E, 10 E] with E the largest Pauli-convention coupling or field
/// magnitude of the spec (1 if all vanish).
std::pair<double, double> default_temperature_range(const DimerSpec& spec);

/// Grid of a measure of the analytic Gibbs state; spec.B is replaced by each
/// B_axis entry.
DiagramGrid measure_grid(const DimerSpec& spec, const std::vector<double>& B_axis,
                         const std::vector<double>& T_axis, Measure measure);

DiagramGrid concurrence_grid(const DimerSpec& spec, const std::vector<double>& B_axis,
                             const std::vector<double>& T_axis);

/// All temperatures in [T_lo, T_hi] at which max{C1, C2} changes sign at field
/// B, ascending. A log-spaced scan brackets every sign change and bisection
/// refines each to |dT| <= tol. Empty when the state never changes character.
std::vector<CriticalPoint> critical_temperatures(const DimerSpec& spec, double B,
                                                 std::pair<double, double> T_range,
                                                 double tol = kDefaultSolverTol,
                                                 std::size_t scan_points = kDefaultScanPoints);

TransitionCurve transition_curve(const DimerSpec& spec, const std::vector<double>& B_axis,
                                 std::pair<double, double> T_range,
                                 double tol = kDefaultSolverTol,
                                 std::size_t scan_points = kDefaultScanPoints);

/// Fraction of grid cells whose value exceeds threshold.
double entangled_area(const DiagramGrid& grid, double threshold = 1e-12);

/// Gamma / ln 3: field-independent critical temperature of the Heisenberg class
///   B (sz1 + sz2) + Gamma sz1 sz2 + J'(sx1 sx2 + sy1 sy2) - D'(sx1 sy2 - sy1 sx2),
/// Gamma = sqrt(J'^2 + D'^2), all in spin-operator units.
/// Throws DomainError for Gamma <= 0.
double heisenberg_tc(double Gamma);

const char* to_string(Branch b);
const char* to_string(Measure m);

}  // namespace dimer
