#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace isonlcs::cli {

inline constexpr std::array<const char*, 11> kCommands = {
    "algebra-check", "eigen",   "eigen-check",     "state",      "dual-check",     "stats",
    "squeeze",       "quadrature-dist", "quasiprob", "pfunction", "canonical-stats"};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 2;
inline constexpr int kExitUsage = 3;

// Raised for anything the user must fix on the command line or config file.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// --help on the command line; carries the usage text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n_max = 200;
  double tolerance = 1e-10;
  std::optional<std::complex<double>> alpha;
  std::optional<std::complex<double>> zeta;
  std::optional<double> r;
  std::optional<double> theta;
  std::optional<std::array<double, 4>> window;
  std::optional<std::array<int, 2>> resolution;
  double s = 0.0;
  std::string kind = "wigner";
  int level = 0;
  int terms = 60;
  std::string output_path;  // empty: <ISONLCS_OUT_DIR or .>/<command>.<csv|json>
  std::string format = "csv";
};

// Flags override config-file values, which override defaults. args excludes
// the program name; args[0] is the command. Throws ConfigError.
RunConfig parse_config(const std::vector<std::string>& args);

// Checks the RunConfig invariants (n_max >= 16, tolerance in (0, 1e-4], state
// parameters required by the command). Throws ConfigError.
void validate(const RunConfig& config);

nlohmann::json to_json(const RunConfig& config);

// FNV-1a 64 over the canonical JSON of the config without the output path,
// as 16 hex digits.
std::string config_hash(const RunConfig& config);

// Output path with the environment default applied.
std::string resolved_output_path(const RunConfig& config);

}  // namespace isonlcs::cli
