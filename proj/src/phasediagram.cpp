#include "dimer/phasediagram.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dimer/classification.hpp"
#include "dimer/errors.hpp"
#include "dimer/measures.hpp"
#include "dimer/thermal.hpp"

namespace dimer {

namespace {

DimerSpec at_field(DimerSpec spec, double B) {
  spec.B = B;
  return spec;
}

struct BranchSample {
  ConcurrencePair c;
  bool entangled = false;
};

// Branch values from the normalized Gibbs state. When both branches underflow
// to zero at low T the sign is taken from the log-space residuals instead.
BranchSample sample_branches(const DimerSpec& spec, double T) {
  BranchSample s;
  s.c = concurrence_branches(thermal_state(compile_spec(spec), T));
  const double g = std::max(s.c.C1, s.c.C2);
  if (g != 0.0) {
    s.entangled = g > 0.0;
  } else {
    const DualityResiduals r = duality_residuals(spec, T);
    s.entangled = std::max(r.resI, r.resII) > 0.0;
  }
  return s;
}

void require_range(std::pair<double, double> range, double tol, const char* where) {
  const auto [lo, hi] = range;
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo > 0.0) || !(hi > lo)) {
    throw InvalidParameter(std::string(where) + ": need 0 < T_lo < T_hi");
  }
  if (!(tol > 0.0)) {
    throw InvalidParameter(std::string(where) + ": tolerance must be positive");
  }
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) throw InvalidParameter("linspace: n must be at least 1");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw InvalidParameter("logspace: bounds must be positive");
  std::vector<double> out = linspace(std::log(lo), std::log(hi), n);
  for (double& v : out) v = std::exp(v);
  out.front() = lo;
  if (n > 1) out.back() = hi;
  return out;
}

std::pair<double, double> default_temperature_range(const DimerSpec& spec) {
  const GeneralCouplings g = compile_spec(spec);
  double scale = std::max({std::abs(g.J), std::abs(g.D), std::abs(g.r), std::abs(g.K),
                           std::abs(g.J_zz), std::abs(g.omega), std::abs(g.delta)});
  if (scale == 0.0) scale = 1.0;
  return {1e-3 * scale, 10.0 * scale};
}

DiagramGrid measure_grid(const DimerSpec& spec, const std::vector<double>& B_axis,
                         const std::vector<double>& T_axis, Measure measure) {
  DiagramGrid grid{B_axis, T_axis, {}};
  grid.values.resize(B_axis.size() * T_axis.size());
  for (std::size_t i = 0; i < B_axis.size(); ++i) {
    const GeneralCouplings g = compile_spec(at_field(spec, B_axis[i]));
    for (std::size_t j = 0; j < T_axis.size(); ++j) {
      const XState x = thermal_state(g, T_axis[j]);
      double v = 0.0;
      switch (measure) {
        case Measure::concurrence:
          v = concurrence_x(x);
          break;
        case Measure::negativity:
          v = negativity(x.matrix());
          break;
        case Measure::chsh:
          v = chsh_parameter(x.matrix());
          break;
      }
      grid.values[i * T_axis.size() + j] = v;
    }
  }
  return grid;
}

DiagramGrid concurrence_grid(const DimerSpec& spec, const std::vector<double>& B_axis,
                             const std::vector<double>& T_axis) {
  return measure_grid(spec, B_axis, T_axis, Measure::concurrence);
}

std::vector<CriticalPoint> critical_temperatures(const DimerSpec& spec, double B,
                                                 std::pair<double, double> T_range,
                                                 double tol, std::size_t scan_points) {
  require_range(T_range, tol, "critical_temperatures");
  if (scan_points < 2) throw InvalidParameter("critical_temperatures: need >= 2 scan points");
  const DimerSpec s = at_field(spec, B);
  const std::vector<double> scan = logspace(T_range.first, T_range.second, scan_points);

  std::vector<CriticalPoint> roots;
  BranchSample prev = sample_branches(s, scan[0]);
  for (std::size_t k = 1; k < scan.size(); ++k) {
    const BranchSample next = sample_branches(s, scan[k]);
    if (next.entangled != prev.entangled) {
      double lo = scan[k - 1];
      double hi = scan[k];
      const bool lo_entangled = prev.entangled;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sample_branches(s, mid).entangled == lo_entangled) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      // Label with the branch that is positive on the entangled side.
      const ConcurrencePair c = lo_entangled ? sample_branches(s, lo).c : sample_branches(s, hi).c;
      roots.push_back({B, 0.5 * (lo + hi), c.C1 > c.C2 ? Branch::C1 : Branch::C2});
    }
    prev = next;
  }
  return roots;
}

TransitionCurve transition_curve(const DimerSpec& spec, const std::vector<double>& B_axis,
                                 std::pair<double, double> T_range, double tol,
                                 std::size_t scan_points) {
  require_range(T_range, tol, "transition_curve");
  TransitionCurve curve;
  curve.solver_tol = tol;
  std::vector<double> fields = B_axis;
  std::sort(fields.begin(), fields.end());
  for (double B : fields) {
    const auto roots = critical_temperatures(spec, B, T_range, tol, scan_points);
    curve.points.insert(curve.points.end(), roots.begin(), roots.end());
  }
  return curve;
}

double entangled_area(const DiagramGrid& grid, double threshold) {
  if (grid.values.empty()) return 0.0;
  const auto count = std::count_if(grid.values.begin(), grid.values.end(),
                                   [threshold](double v) { return v > threshold; });
  return static_cast<double>(count) / static_cast<double>(grid.values.size());
}

double heisenberg_tc(double Gamma) {
  if (!std::isfinite(Gamma)) throw InvalidParameter("heisenberg_tc: non-finite coupling");
  if (Gamma <= 0.0) throw DomainError("heisenberg_tc: coupling must be positive");
  return Gamma / std::log(3.0);
}

const char* to_string(Branch b) { return b == Branch::C1 ? "C1" : "C2"; }

const char* to_string(Measure m) {
  switch (m) {
    case Measure::concurrence:
      return "concurrence";
    case Measure::negativity:
      return "negativity";
    case Measure::chsh:
      return "chsh";
  }
  return "unknown";
}

}  // namespace dimer
