#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "dimer/classification.hpp"
#include "dimer/cli.hpp"
#include "dimer/errors.hpp"
#include "dimer/measures.hpp"
#include "dimer/thermal.hpp"

namespace dimer::cli {

using nlohmann::json;

namespace {

json spec_json(const DimerSpec& s) {
  return {{"category", to_string(s.category)},
          {"convention", to_string(s.convention)},
          {"J", s.couplings.J},
          {"D", s.couplings.D},
          {"r", s.couplings.r},
          {"K", s.couplings.K},
          {"J_zz", s.couplings.J_zz}};
}

json invariants_json(const TorusInvariants& t) {
  return {{"alpha", t.alpha},
          {"beta", t.beta},
          {"J_zz", t.J_zz},
          {"category", to_string(t.category)},
          {"radius_JD", std::sqrt(t.alpha)},
          {"radius_rK", std::sqrt(t.beta)}};
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string row;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) row += ',';
    row += c;
    first = false;
  }
  row += '\n';
  return row;
}

DimerSpec at_field(DimerSpec s, double B) {
  s.B = B;
  return s;
}

std::string run_concurrence(const RunConfig& cfg) {
  json rows = json::array();
  std::string csv = csv_row({"B", "T", "C1", "C2", "concurrence", "negativity", "chsh"});
  for (double B : cfg.B->values()) {
    const GeneralCouplings g = compile_spec(at_field(*cfg.spec, B));
    for (double T : cfg.T->values()) {
      const XState x = thermal_state(g, T);
      const ConcurrencePair c = concurrence_branches(x);
      const double conc = concurrence_x(x);
      const double neg = negativity(x.matrix());
      const double chsh = chsh_parameter(x.matrix());
      csv += csv_row({format_number(B), format_number(T), format_number(c.C1),
                      format_number(c.C2), format_number(conc), format_number(neg),
                      format_number(chsh)});
      rows.push_back({{"B", B},
                      {"T", T},
                      {"C1", c.C1},
                      {"C2", c.C2},
                      {"concurrence", conc},
                      {"negativity", neg},
                      {"chsh", chsh}});
    }
  }
  if (cfg.format == Format::json) return json{{"spec", spec_json(*cfg.spec)}, {"points", rows}}.dump(2) + "\n";
  return csv;
}

std::string run_diagram(const RunConfig& cfg) {
  const DiagramGrid grid = measure_grid(*cfg.spec, cfg.B->values(), cfg.T->values(), cfg.measure);
  if (cfg.format == Format::json) {
    json values = json::array();
    for (std::size_t i = 0; i < grid.B_axis.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < grid.T_axis.size(); ++j) row.push_back(grid.value(i, j));
      values.push_back(row);
    }
    return json{{"spec", spec_json(*cfg.spec)},
                {"measure", to_string(cfg.measure)},
                {"B", grid.B_axis},
                {"T", grid.T_axis},
                {"values", values},
                {"entangled_area", entangled_area(grid)}}
               .dump(2) +
           "\n";
  }
  std::string csv = csv_row({"B", "T", "value"});
  for (std::size_t i = 0; i < grid.B_axis.size(); ++i)
    for (std::size_t j = 0; j < grid.T_axis.size(); ++j)
      csv += csv_row({format_number(grid.B_axis[i]), format_number(grid.T_axis[j]),
                      format_number(grid.value(i, j))});
  return csv;
}

std::string run_curve(const RunConfig& cfg) {
  const std::pair<double, double> range =
      cfg.T ? std::pair{cfg.T->min, cfg.T->max} : default_temperature_range(*cfg.spec);
  const TransitionCurve curve =
      transition_curve(*cfg.spec, cfg.B->values(), range, cfg.tol, cfg.scan_points);
  if (cfg.format == Format::json) {
    json points = json::array();
    for (const auto& p : curve.points)
      points.push_back({{"B", p.B}, {"Tc", p.Tc}, {"branch", to_string(p.branch)}});
    return json{{"spec", spec_json(*cfg.spec)},
                {"solver_tol", curve.solver_tol},
                {"T_range", {range.first, range.second}},
                {"points", points}}
               .dump(2) +
           "\n";
  }
  std::string csv = csv_row({"B", "Tc", "branch"});
  for (const auto& p : curve.points)
    csv += csv_row({format_number(p.B), format_number(p.Tc), to_string(p.branch)});
  return csv;
}

std::string run_classify(const RunConfig& cfg) {
  const DimerSpec& s = *cfg.spec;
  const DimerSpec d = dual_map(s);
  json out{{"spec", spec_json(s)},
           {"invariants", invariants_json(torus_invariants(s))},
           {"dual", spec_json(d)},
           {"dual_invariants", invariants_json(torus_invariants(d))}};
  if (cfg.compare) {
    out["compare"] = spec_json(*cfg.compare);
    out["compare_invariants"] = invariants_json(torus_invariants(*cfg.compare));
    out["same_class"] = same_class(s, *cfg.compare);
    out["is_dual_pair"] = is_dual_pair(s, *cfg.compare);
  }
  return out.dump(2) + "\n";
}

std::string run_dual(const RunConfig& cfg) {
  const DimerSpec& s = *cfg.spec;
  const DimerSpec d = dual_map(s);
  return json{{"spec", spec_json(s)},
              {"dual", spec_json(d)},
              {"invariants", invariants_json(torus_invariants(s))},
              {"dual_invariants", invariants_json(torus_invariants(d))},
              {"is_dual_pair", is_dual_pair(s, d)}}
             .dump(2) +
         "\n";
}

std::string run_sample(const RunConfig& cfg) {
  const TorusInvariants inv = cfg.invariants ? *cfg.invariants : torus_invariants(*cfg.spec);
  const auto members = sample_class(inv, cfg.samples, cfg.seed, cfg.sampling);
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto& m : members) arr.push_back(spec_json(m));
    return json{{"invariants", invariants_json(inv)}, {"members", arr}}.dump(2) + "\n";
  }
  std::string csv = csv_row({"category", "J", "D", "r", "K", "J_zz"});
  for (const auto& m : members)
    csv += csv_row({to_string(m.category), format_number(m.couplings.J),
                    format_number(m.couplings.D), format_number(m.couplings.r),
                    format_number(m.couplings.K), format_number(m.couplings.J_zz)});
  return csv;
}

double max_abs_diff(const Matrix4c& a, const Matrix4c& b) { return (a - b).cwiseAbs().maxCoeff(); }

json check(const char* name, double deviation, double tolerance) {
  return {{"name", name},
          {"max_deviation", deviation},
          {"tolerance", tolerance},
          {"passed", deviation <= tolerance}};
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json verification_report(std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coupling(-2.0, 2.0);
  std::uniform_real_distribution<double> log_t(std::log(1e-3), std::log(1e3));
  std::bernoulli_distribution coin(0.5);

  auto random_couplings = [&] {
    GeneralCouplings g;
    g.J = coupling(rng);
    g.D = coupling(rng);
    g.r = coupling(rng);
    g.K = coupling(rng);
    g.J_zz = coupling(rng);
    g.omega = coupling(rng);
    g.delta = coupling(rng);
    return g;
  };
  auto random_spec = [&] {
    DimerSpec s;
    s.category = coin(rng) ? Category::symmetric : Category::antisymmetric;
    s.couplings = Exchange{coupling(rng), coupling(rng), coupling(rng), coupling(rng), coupling(rng)};
    s.B = coupling(rng);
    return s;
  };

  double oracle_dev = 0.0;
  double wootters_dev = 0.0;
  for (std::size_t k = 0; k < trials; ++k) {
    const GeneralCouplings g = random_couplings();
    const double T = std::exp(log_t(rng));
    const XState x = thermal_state(g, T);
    const Matrix4c ref = thermal_state_oracle(hamiltonian_matrix(g), T);
    oracle_dev = std::max(oracle_dev, max_abs_diff(x.matrix(), ref));
    wootters_dev = std::max(wootters_dev, std::abs(concurrence_x(x) - concurrence_wootters(ref)));
  }

  double dual_state_dev = 0.0;
  double dual_measure_dev = 0.0;
  for (std::size_t k = 0; k < trials; ++k) {
    const DimerSpec s = random_spec();
    const double T = std::exp(log_t(rng));
    const Matrix4c rho = thermal_state(compile_spec(s), T).matrix();
    const Matrix4c rho_dual = thermal_state(compile_spec(dual_map(s)), T).matrix();
    dual_state_dev = std::max(dual_state_dev, max_abs_diff(rho_dual, flip_second_spin(rho)));
    dual_measure_dev = std::max({dual_measure_dev,
                                 std::abs(concurrence_wootters(rho) - concurrence_wootters(rho_dual)),
                                 std::abs(negativity(rho) - negativity(rho_dual)),
                                 std::abs(chsh_parameter(rho) - chsh_parameter(rho_dual))});
  }

  // Two members of one class must agree at every (B, T).
  double class_dev = 0.0;
  const std::size_t class_trials = std::max<std::size_t>(1, trials / 10);
  std::uniform_real_distribution<double> radius2(0.0, 4.0);
  for (std::size_t k = 0; k < class_trials; ++k) {
    TorusInvariants inv{radius2(rng), radius2(rng), coupling(rng),
                        coin(rng) ? Category::symmetric : Category::antisymmetric};
    const auto members = sample_class(inv, 2, rng(), SamplingMode::uniform);
    for (int p = 0; p < 10; ++p) {
      const double B = coupling(rng);
      const double T = std::exp(log_t(rng));
      const double c0 = concurrence_x(thermal_state(compile_spec(at_field(members[0], B)), T));
      const double c1 = concurrence_x(thermal_state(compile_spec(at_field(members[1], B)), T));
      class_dev = std::max(class_dev, std::abs(c0 - c1));
    }
  }

  json checks = json::array({check("thermal_state_vs_oracle", oracle_dev, 1e-12),
                             check("concurrence_x_vs_wootters", wootters_dev, 1e-10),
                             check("dual_state_vs_bit_flip", dual_state_dev, 1e-12),
                             check("dual_measures", dual_measure_dev, 1e-10),
                             check("class_invariance", class_dev, 1e-12)});
  bool passed = true;
  for (const auto& c : checks) passed = passed && c.at("passed").get<bool>();
  return {{"seed", seed}, {"trials", trials}, {"checks", checks}, {"passed", passed}};
}

RunResult execute(const RunConfig& cfg) {
  RunResult result;
  try {
    switch (cfg.command) {
      case Command::concurrence:
        result.payload = run_concurrence(cfg);
        break;
      case Command::diagram:
        result.payload = run_diagram(cfg);
        break;
      case Command::curve:
        result.payload = run_curve(cfg);
        break;
      case Command::classify:
        result.payload = run_classify(cfg);
        break;
      case Command::dual:
        result.payload = run_dual(cfg);
        break;
      case Command::sample:
        result.payload = run_sample(cfg);
        break;
      case Command::verify: {
        const json report = verification_report(cfg.seed, cfg.trials);
        result.payload = report.dump(2) + "\n";
        if (!report.at("passed").get<bool>()) {
          result.exit_code = kExitNumeric;
          result.message = "verification exceeded tolerance";
        }
        break;
      }
    }
  } catch (const InvalidParameter& e) {
    result = {kExitUsage, "", e.what()};
  } catch (const DomainError& e) {
    result = {kExitNumeric, "", e.what()};
  } catch (const NumericError& e) {
    result = {kExitNumeric, "", e.what()};
  } catch (const InvalidState& e) {
    result = {kExitNumeric, "", e.what()};
  }
  return result;
}

int run(const RunConfig& cfg) {
  const RunResult result = execute(cfg);
  if (!result.message.empty()) std::cerr << "dimer: " << result.message << '\n';
  if (result.payload.empty()) return result.exit_code;

  if (cfg.out == "-") {
    std::cout << result.payload << std::flush;
    if (!std::cout) {
      std::cerr << "dimer: failed writing to standard output\n";
      return kExitIo;
    }
    return result.exit_code;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    std::cerr << "dimer: cannot open '" << cfg.out << "' for writing\n";
    return kExitIo;
  }
  file << result.payload;
  file.close();
  if (!file) {
    std::cerr << "dimer: failed writing '" << cfg.out << "'\n";
    return kExitIo;
  }
  return result.exit_code;
}

}  // namespace dimer::cli
