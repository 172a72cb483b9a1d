#include <cmath>
#include <string>

#include "dimer/cli.hpp"

namespace dimer::cli {

using nlohmann::json;

namespace {

// 1-based line and column of a byte offset into text.
std::pair<int, int> locate(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i + 1 < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

double number_field(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(std::string("field '") + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(std::string("field '") + key + "' must be finite");
  return d;
}

double required_number(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  return number_field(obj, key, 0.0);
}

std::size_t count_field(const json& obj, const char* key, std::size_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ConfigError(std::string("field '") + key + "' must be an integer >= 1");
  }
  return v.get<std::size_t>();
}

std::string string_field(const json& obj, const char* key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Category parse_category(const std::string& s) {
  if (s == "symmetric") return Category::symmetric;
  if (s == "antisymmetric") return Category::antisymmetric;
  throw ConfigError("unknown category '" + s + "'");
}

Convention parse_convention(const std::string& s) {
  if (s == "pauli") return Convention::pauli;
  if (s == "spin") return Convention::spin;
  throw ConfigError("unknown convention '" + s + "'");
}

Command parse_command(const std::string& s) {
  if (s == "concurrence") return Command::concurrence;
  if (s == "diagram") return Command::diagram;
  if (s == "curve") return Command::curve;
  if (s == "classify") return Command::classify;
  if (s == "dual") return Command::dual;
  if (s == "verify") return Command::verify;
  if (s == "sample") return Command::sample;
  throw ConfigError("unknown command '" + s + "'");
}

Measure parse_measure(const std::string& s) {
  if (s == "concurrence") return Measure::concurrence;
  if (s == "negativity") return Measure::negativity;
  if (s == "chsh") return Measure::chsh;
  throw ConfigError("unknown measure '" + s + "'");
}

// Either a bare number (single point) or {"min", "max", "n", "spacing"}.
Axis parse_axis(const json& v, const char* name) {
  Axis axis;
  if (v.is_number()) {
    axis.min = axis.max = v.get<double>();
    axis.n = 1;
  } else if (v.is_object()) {
    axis.min = required_number(v, "min");
    axis.max = number_field(v, "max", axis.min);
    axis.n = count_field(v, "n", 1);
    const std::string spacing = string_field(v, "spacing", "linear");
    if (spacing == "linear") {
      axis.spacing = Spacing::linear;
    } else if (spacing == "log") {
      axis.spacing = Spacing::log;
    } else {
      throw ConfigError("unknown spacing '" + spacing + "'");
    }
  } else {
    throw ConfigError(std::string("axis '") + name + "' must be a number or an object");
  }
  if (!std::isfinite(axis.min) || !std::isfinite(axis.max)) {
    throw ConfigError(std::string("axis '") + name + "' bounds must be finite");
  }
  if (axis.max < axis.min) throw ConfigError(std::string("axis '") + name + "' has max < min");
  if (axis.n > 1 && axis.max == axis.min) {
    throw ConfigError(std::string("axis '") + name + "' is empty");
  }
  if (axis.spacing == Spacing::log && axis.min <= 0.0) {
    throw ConfigError(std::string("axis '") + name + "' with log spacing needs min > 0");
  }
  return axis;
}

}  // namespace

std::vector<double> Axis::values() const {
  if (n == 1) return {min};
  return spacing == Spacing::log ? logspace(min, max, n) : linspace(min, max, n);
}

DimerSpec parse_spec(const json& doc) {
  if (!doc.contains("preset")) throw ConfigError("missing field 'preset'");
  const json& preset = doc.at("preset");
  if (!preset.is_object() || preset.size() != 1) {
    throw ConfigError("'preset' must be an object with exactly one of heisenberg, xy, general");
  }
  const std::string name = preset.begin().key();
  const json& params = preset.begin().value();
  if (!params.is_object()) throw ConfigError("preset parameters must be an object");

  // "category" may sit next to the preset or inside its parameters.
  const Category category = parse_category(
      string_field(params, "category", string_field(doc, "category", "symmetric")));
  DimerSpec spec;
  spec.category = category;

  auto from_spin = [&](double a_xx, double a_yy, double c_zz) {
    const GeneralCouplings g = couplings_from_spin_convention(a_xx, a_yy, 0.0, 0.0, c_zz, 0.0, 0.0);
    spec.convention = Convention::pauli;
    spec.couplings = Exchange{g.J, g.D, g.r, g.K, g.J_zz};
  };

  if (name == "heisenberg") {
    // B (sz1 +- sz2) + J s1 . s2
    const double J = required_number(params, "J");
    from_spin(J, J, J);
  } else if (name == "xy") {
    // (1 + gamma) sx1 sx2 + (1 - gamma) sy1 sy2 + B (sz1 +- sz2)
    const double gamma = required_number(params, "gamma");
    from_spin(1.0 + gamma, 1.0 - gamma, 0.0);
  } else if (name == "general") {
    spec.convention = parse_convention(string_field(params, "convention", "pauli"));
    spec.couplings = Exchange{number_field(params, "J", 0.0), number_field(params, "D", 0.0),
                              number_field(params, "r", 0.0), number_field(params, "K", 0.0),
                              number_field(params, "J_zz", 0.0)};
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  return spec;
}

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte);
    throw ConfigError("malformed JSON at line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + e.what(),
                      line, column);
  }
  return parse_config_document(doc);
}

RunConfig parse_config_document(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  try {
    RunConfig cfg;
    if (!doc.contains("command")) throw ConfigError("missing field 'command'");
    cfg.command = parse_command(string_field(doc, "command", ""));

    if (doc.contains("preset")) cfg.spec = parse_spec(doc);
    if (doc.contains("compare")) cfg.compare = parse_spec(doc.at("compare"));
    if (doc.contains("invariants")) {
      const json& inv = doc.at("invariants");
      TorusInvariants t;
      t.alpha = required_number(inv, "alpha");
      t.beta = required_number(inv, "beta");
      t.J_zz = number_field(inv, "J_zz", 0.0);
      t.category = parse_category(string_field(inv, "category", "symmetric"));
      if (t.alpha < 0.0 || t.beta < 0.0) throw ConfigError("invariants must be non-negative");
      cfg.invariants = t;
    }
    if (doc.contains("B")) cfg.B = parse_axis(doc.at("B"), "B");
    if (doc.contains("T")) {
      cfg.T = parse_axis(doc.at("T"), "T");
      if (cfg.T->min <= 0.0) throw ConfigError("temperatures must be positive");
    }
    cfg.measure = parse_measure(string_field(doc, "measure", "concurrence"));
    cfg.tol = number_field(doc, "tol", kDefaultSolverTol);
    if (!(cfg.tol > 0.0)) throw ConfigError("'tol' must be positive");
    cfg.scan_points = count_field(doc, "scan_points", kDefaultScanPoints);
    if (cfg.scan_points < 2) throw ConfigError("'scan_points' must be at least 2");
    cfg.samples = count_field(doc, "samples", 16);
    const std::string sampling = string_field(doc, "sampling", "grid");
    if (sampling == "grid") {
      cfg.sampling = SamplingMode::grid;
    } else if (sampling == "uniform") {
      cfg.sampling = SamplingMode::uniform;
    } else {
      throw ConfigError("unknown sampling '" + sampling + "'");
    }
    cfg.trials = count_field(doc, "trials", 1000);
    if (doc.contains("seed")) {
      const json& s = doc.at("seed");
      if (!s.is_number_unsigned()) throw ConfigError("'seed' must be a non-negative integer");
      cfg.seed = s.get<std::uint64_t>();
    }
    cfg.out = string_field(doc, "out", "-");
    const std::string default_format =
        (cfg.command == Command::classify || cfg.command == Command::dual ||
         cfg.command == Command::verify)
            ? "json"
            : "csv";
    const std::string format = string_field(doc, "format", default_format);
    if (format == "csv") {
      cfg.format = Format::csv;
    } else if (format == "json") {
      cfg.format = Format::json;
    } else {
      throw ConfigError("unknown format '" + format + "'");
    }

    // Per-command requirements.
    const bool needs_spec = cfg.command != Command::verify &&
                            !(cfg.command == Command::sample && cfg.invariants);
    if (needs_spec && !cfg.spec) throw ConfigError("command requires a 'preset' spec");
    switch (cfg.command) {
      case Command::concurrence:
        if (!cfg.B || !cfg.T) throw ConfigError("concurrence requires 'B' and 'T'");
        break;
      case Command::diagram:
        if (!cfg.B || !cfg.T) throw ConfigError("diagram requires 'B' and 'T'");
        break;
      case Command::curve:
        if (!cfg.B) throw ConfigError("curve requires 'B'");
        if (cfg.T && !(cfg.T->max > cfg.T->min)) {
          throw ConfigError("curve requires a temperature range with max > min");
        }
        break;
      case Command::classify:
      case Command::dual:
        if (cfg.format != Format::json) throw ConfigError("classify/dual emit JSON only");
        break;
      case Command::verify:
      case Command::sample:
        break;
    }
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
}

}  // namespace dimer::cli
