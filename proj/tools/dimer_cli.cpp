// Thermal entanglement of spin-1/2 dimers: point values, (B, T) diagrams,
// transition curves, toric classes and their duals.
//
// Usage:
//   dimer --config run.json
//   dimer --command curve --preset heisenberg --J 1 --Bmin 0 --Bmax 5 --Bn 11 --Tmin 0.01 --Tmax 3
//
// Flags override values read from the config file.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dimer/cli.hpp"

namespace {

using nlohmann::json;

template <typename T>
void set_if(json& obj, const char* key, const std::optional<T>& v) {
  if (v) obj[key] = *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal entanglement of two-spin dimers"};

  std::optional<std::string> config_path, command, preset, category, convention, measure, format,
      out, spacing_T, sampling;
  std::optional<double> J, D, r, K, Jzz, gamma, B, Bmin, Bmax, T, Tmin, Tmax, tol;
  std::optional<std::size_t> Bn, Tn, scan_points, samples, trials;
  std::optional<std::uint64_t> seed;

  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--command", command, "concurrence|diagram|curve|classify|dual|verify|sample");
  app.add_option("--preset", preset, "heisenberg|xy|general");
  app.add_option("--category", category, "symmetric|antisymmetric");
  app.add_option("--convention", convention, "pauli|spin (general preset)");
  app.add_option("--J", J, "exchange J (heisenberg J_H or general J)");
  app.add_option("--D", D, "Dzyaloshinskii-Moriya D (general)");
  app.add_option("--r", r, "XY anisotropy r (general)");
  app.add_option("--K", K, "symmetric off-diagonal exchange K (general)");
  app.add_option("--Jzz", Jzz, "zz coupling (general)");
  app.add_option("--gamma", gamma, "XY anisotropy gamma (xy)");
  app.add_option("--B", B, "single field value");
  app.add_option("--Bmin", Bmin);
  app.add_option("--Bmax", Bmax);
  app.add_option("--Bn", Bn);
  app.add_option("--T", T, "single temperature");
  app.add_option("--Tmin", Tmin);
  app.add_option("--Tmax", Tmax);
  app.add_option("--Tn", Tn);
  app.add_option("--Tspacing", spacing_T, "linear|log");
  app.add_option("--measure", measure, "concurrence|negativity|chsh (diagram)");
  app.add_option("--tol", tol, "bisection tolerance in T (curve)");
  app.add_option("--scan-points", scan_points, "log-spaced scan points (curve)");
  app.add_option("--samples", samples, "class members (sample)");
  app.add_option("--sampling", sampling, "grid|uniform (sample)");
  app.add_option("--trials", trials, "random trials per suite (verify)");
  app.add_option("--seed", seed, "seed for verify/sample (default $DIMER_SEED or 42)");
  app.add_option("--format", format, "csv|json");
  app.add_option("--out", out, "output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? dimer::cli::kExitOk : dimer::cli::kExitUsage;
  }

  json doc = json::object();
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) {
      std::cerr << "dimer: cannot read '" << *config_path << "'\n";
      return dimer::cli::kExitIo;
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
      doc = json::parse(text.str());
    } catch (const json::parse_error&) {
      try {
        dimer::cli::parse_config(text.str());
      } catch (const dimer::cli::ConfigError& e) {
        std::cerr << "dimer: " << *config_path << ": " << e.what() << '\n';
      }
      return dimer::cli::kExitUsage;
    }
    if (!doc.is_object()) {
      std::cerr << "dimer: config must be a JSON object\n";
      return dimer::cli::kExitUsage;
    }
  }

  if (!doc.contains("seed")) {
    if (const char* env = std::getenv("DIMER_SEED")) {
      try {
        doc["seed"] = std::stoull(env);
      } catch (const std::exception&) {
        std::cerr << "dimer: DIMER_SEED must be a non-negative integer\n";
        return dimer::cli::kExitUsage;
      }
    }
  }

  set_if(doc, "command", command);
  set_if(doc, "category", category);
  set_if(doc, "measure", measure);
  set_if(doc, "format", format);
  set_if(doc, "out", out);
  set_if(doc, "tol", tol);
  set_if(doc, "scan_points", scan_points);
  set_if(doc, "samples", samples);
  set_if(doc, "sampling", sampling);
  set_if(doc, "trials", trials);
  set_if(doc, "seed", seed);

  if (preset) doc["preset"] = json{{*preset, json::object()}};
  if (J || D || r || K || Jzz || gamma || convention) {
    if (!doc.contains("preset") || !doc["preset"].is_object() || doc["preset"].size() != 1) {
      std::cerr << "dimer: coupling flags need --preset\n";
      return dimer::cli::kExitUsage;
    }
    json& params = doc["preset"].begin().value();
    set_if(params, "J", J);
    set_if(params, "D", D);
    set_if(params, "r", r);
    set_if(params, "K", K);
    set_if(params, "J_zz", Jzz);
    set_if(params, "gamma", gamma);
    set_if(params, "convention", convention);
  }

  auto merge_axis = [&](const char* key, const std::optional<double>& single,
                        const std::optional<double>& lo, const std::optional<double>& hi,
                        const std::optional<std::size_t>& n,
                        const std::optional<std::string>& spacing) {
    if (single) {
      doc[key] = *single;
      return;
    }
    if (!(lo || hi || n || spacing)) return;
    if (!doc.contains(key) || !doc[key].is_object()) {
      const json previous = doc.contains(key) ? doc[key] : json();
      doc[key] = json::object();
      if (previous.is_number()) doc[key]["min"] = previous;
    }
    set_if(doc[key], "min", lo);
    set_if(doc[key], "max", hi);
    set_if(doc[key], "n", n);
    set_if(doc[key], "spacing", spacing);
  };
  merge_axis("B", B, Bmin, Bmax, Bn, std::nullopt);
  merge_axis("T", T, Tmin, Tmax, Tn, spacing_T);

  dimer::cli::RunConfig cfg;
  try {
    cfg = dimer::cli::parse_config_document(doc);
  } catch (const dimer::cli::ConfigError& e) {
    std::cerr << "dimer: " << e.what() << '\n';
    return dimer::cli::kExitUsage;
  }
  return dimer::cli::run(cfg);
}
