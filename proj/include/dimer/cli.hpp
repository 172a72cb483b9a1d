#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dimer/classification.hpp"
#include "dimer/model.hpp"
#include "dimer/phasediagram.hpp"

namespace dimer::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitIo = 3;

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Malformed JSON or a config that fails validation. For parse errors
/// line() and column() locate the offending character (1-based).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class Command { concurrence, diagram, curve, classify, dual, verify, sample };
enum class Format { csv, json };
enum class Spacing { linear, log };

struct Axis {
  double min = 0.0;
  double max = 0.0;
  std::size_t n = 1;
  Spacing spacing = Spacing::linear;

  [[nodiscard]] std::vector<double> values() const;
};

struct RunConfig {
  Command command = Command::concurrence;
  std::optional<DimerSpec> spec;
  std::optional<DimerSpec> compare;            // classify: second spec
  std::optional<TorusInvariants> invariants;   // sample: explicit class
  std::optional<Axis> B;
  std::optional<Axis> T;
  Measure measure = Measure::concurrence;
  double tol = kDefaultSolverTol;
  std::size_t scan_points = kDefaultScanPoints;
  std::size_t samples = 16;
  SamplingMode sampling = SamplingMode::grid;
  std::size_t trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::csv;
  std::string out = "-";
};

/// Parses and validates a JSON config. Throws ConfigError.
RunConfig parse_config(std::string_view text);
RunConfig parse_config_document(const nlohmann::json& doc);

/// Spec from a {"preset": ..., "category": ...} object.
DimerSpec parse_spec(const nlohmann::json& doc);

struct RunResult {
  int exit_code = kExitOk;
  std::string payload;  // file content
  std::string message;  // diagnostics for stderr
};

/// Runs the command without touching the filesystem.
RunResult execute(const RunConfig& config);

/// execute() followed by a single write of the payload to config.out
/// ("-" for standard output).
int run(const RunConfig& config);

/// Seeded verification suites; used by the verify command.
nlohmann::json verification_report(std::uint64_t seed, std::size_t trials);

/// %.17g formatting used for every number in CSV output.
std::string format_number(double v);

}  // namespace dimer::cli
