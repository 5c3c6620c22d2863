#include "isonlcs/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>

#include <CLI11.hpp>

#include "isonlcs/eigenbasis.hpp"

namespace isonlcs::cli {

namespace {

bool is_command(const std::string& name) {
  return std::find(kCommands.begin(), kCommands.end(), name) != kCommands.end();
}

std::complex<double> complex_from(const std::vector<double>& v, const char* what) {
  if (v.size() != 2) throw ConfigError(std::string(what) + " needs two numbers RE IM");
  return {v[0], v[1]};
}

template <typename T, std::size_t N>
std::array<T, N> array_from(const std::vector<T>& v, const char* what) {
  if (v.size() != N) {
    throw ConfigError(std::string(what) + " needs " + std::to_string(N) + " values");
  }
  std::array<T, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

const std::set<std::string>& known_file_keys() {
  static const std::set<std::string> keys = {
      "n_max", "tolerance", "alpha", "zeta",  "r",     "theta", "window",
      "resolution", "s",    "kind",  "level", "terms", "out",   "format"};
  return keys;
}

template <typename T>
T file_value(const nlohmann::json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config file key '" + key + "' has the wrong type");
  }
}

nlohmann::json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file " + path + " must hold a JSON object");
  std::vector<std::string> unknown;
  for (const auto& item : j.items()) {
    if (!known_file_keys().count(item.key())) unknown.push_back(item.key());
  }
  if (!unknown.empty()) {
    std::string msg = "unknown config keys:";
    for (const auto& k : unknown) msg += " " + k;
    throw ConfigError(msg);
  }
  return j;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  if (args.empty()) throw ConfigError("missing command; run with --help for the list");
  if (args[0] == "--help" || args[0] == "-h") {
    std::string text = "usage: isonlcs COMMAND [options]\ncommands:";
    for (auto c : kCommands) text += " " + std::string(c);
    throw HelpRequested(text + "\nrun 'isonlcs COMMAND --help' for the options of a command\n");
  }
  RunConfig cfg;
  cfg.command = args[0];
  if (!is_command(cfg.command)) throw ConfigError("unknown command '" + cfg.command + "'");

  CLI::App app{"isonlcs " + cfg.command};
  app.allow_extras(false);

  int n_max = cfg.n_max;
  double tol = cfg.tolerance;
  std::vector<double> alpha, zeta, window;
  std::vector<int> resolution;
  double r = 0.0, theta = 0.0, s = 0.0;
  int level = 0, terms = 0;
  std::string kind, out, config_path, format;

  auto* o_nmax = app.add_option("--n-max", n_max, "Truncation n_max");
  auto* o_tol = app.add_option("--tol", tol, "Residual tolerance");
  auto* o_alpha = app.add_option("--alpha", alpha, "Nonlinear coherent parameter RE IM")->expected(2);
  auto* o_zeta = app.add_option("--zeta", zeta, "Canonical coherent parameter RE IM")->expected(2);
  auto* o_r = app.add_option("--r", r, "Parameter modulus");
  auto* o_theta = app.add_option("--theta", theta, "Parameter phase");
  auto* o_window = app.add_option("--window", window, "X0 X1 Y0 Y1")->expected(4);
  auto* o_res = app.add_option("--resolution", resolution, "NX NY")->expected(2);
  auto* o_s = app.add_option("--s", s, "Ordering parameter s < 1");
  auto* o_kind = app.add_option("--kind", kind, "wigner|husimi|sgeneral");
  auto* o_level = app.add_option("--level", level, "Eigenfunction level");
  auto* o_terms = app.add_option("--terms", terms, "Dual-series terms");
  auto* o_out = app.add_option("--out", out, "Artifact path");
  auto* o_format = app.add_option("--format", format, "csv|json");
  app.add_option("--config", config_path, "JSON config file");

  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw ConfigError(std::string(e.what()) + "\n" + app.help());
  }

  if (!config_path.empty()) {
    const nlohmann::json j = load_file(config_path);
    auto take = [&](const char* key, CLI::Option* opt) {
      return j.contains(key) && opt->count() == 0;
    };
    if (take("n_max", o_nmax)) n_max = file_value<int>(j, "n_max");
    if (take("tolerance", o_tol)) tol = file_value<double>(j, "tolerance");
    if (take("alpha", o_alpha)) alpha = file_value<std::vector<double>>(j, "alpha");
    if (take("zeta", o_zeta)) zeta = file_value<std::vector<double>>(j, "zeta");
    if (take("r", o_r)) cfg.r = file_value<double>(j, "r");
    if (take("theta", o_theta)) cfg.theta = file_value<double>(j, "theta");
    if (take("window", o_window)) window = file_value<std::vector<double>>(j, "window");
    if (take("resolution", o_res)) resolution = file_value<std::vector<int>>(j, "resolution");
    if (take("s", o_s)) cfg.s = file_value<double>(j, "s");
    if (take("kind", o_kind)) cfg.kind = file_value<std::string>(j, "kind");
    if (take("level", o_level)) cfg.level = file_value<int>(j, "level");
    if (take("terms", o_terms)) cfg.terms = file_value<int>(j, "terms");
    if (take("out", o_out)) cfg.output_path = file_value<std::string>(j, "out");
    if (take("format", o_format)) cfg.format = file_value<std::string>(j, "format");
  }

  cfg.n_max = n_max;
  cfg.tolerance = tol;
  if (!alpha.empty()) cfg.alpha = complex_from(alpha, "alpha");
  if (!zeta.empty()) cfg.zeta = complex_from(zeta, "zeta");
  if (o_r->count()) cfg.r = r;
  if (o_theta->count()) cfg.theta = theta;
  if (!window.empty()) cfg.window = array_from<double, 4>(window, "window");
  if (!resolution.empty()) cfg.resolution = array_from<int, 2>(resolution, "resolution");
  if (o_s->count()) cfg.s = s;
  if (o_kind->count()) cfg.kind = kind;
  if (o_level->count()) cfg.level = level;
  if (o_terms->count()) cfg.terms = terms;
  if (o_out->count()) cfg.output_path = out;
  if (o_format->count()) cfg.format = format;
  return cfg;
}

void validate(const RunConfig& c) {
  if (!is_command(c.command)) throw ConfigError("unknown command '" + c.command + "'");
  if (c.n_max < 16) {
    throw ConfigError("n_max must be >= 16 (got " + std::to_string(c.n_max) + ")");
  }
  if (!(c.tolerance > 0.0 && c.tolerance <= 1e-4)) {
    throw ConfigError("tolerance must lie in (0, 1e-4]");
  }
  if (c.format != "csv" && c.format != "json") throw ConfigError("format must be csv or json");
  if (c.kind != "wigner" && c.kind != "husimi" && c.kind != "sgeneral") {
    throw ConfigError("kind must be wigner, husimi or sgeneral");
  }
  auto finite = [](std::complex<double> z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  if ((c.alpha && !finite(*c.alpha)) || (c.zeta && !finite(*c.zeta))) {
    throw ConfigError("alpha and zeta must be finite");
  }
  if (c.r && !(std::isfinite(*c.r) && *c.r >= 0.0)) throw ConfigError("r must be finite and >= 0");
  if (c.theta && !std::isfinite(*c.theta)) throw ConfigError("theta must be finite");
  if (!std::isfinite(c.s) || c.s >= 1.0) throw ConfigError("s must be finite and < 1");
  if (c.window) {
    const auto& w = *c.window;
    for (double v : w) {
      if (!std::isfinite(v)) throw ConfigError("window bounds must be finite");
    }
    if (!(w[0] < w[1]) || !(w[2] < w[3])) throw ConfigError("window needs X0 < X1 and Y0 < Y1");
  }
  if (c.resolution && ((*c.resolution)[0] < 2 || (*c.resolution)[1] < 2)) {
    throw ConfigError("resolution needs at least 2 points per axis");
  }
  if (c.terms < 10) throw ConfigError("terms must be >= 10");
  if (!eigenbasis::is_level(c.level)) throw ConfigError("level must be 0 or >= 3");

  const std::string& cmd = c.command;
  const bool needs_state = cmd == "state" || cmd == "quadrature-dist" || cmd == "quasiprob";
  if (needs_state && (c.alpha.has_value() == c.zeta.has_value())) {
    throw ConfigError(cmd + " needs exactly one of --alpha / --zeta");
  }
  if ((cmd == "dual-check" || cmd == "pfunction") && (!c.alpha || c.zeta)) {
    throw ConfigError(cmd + " needs --alpha and no --zeta");
  }
  if (cmd == "canonical-stats" && (!c.zeta || c.alpha)) {
    throw ConfigError("canonical-stats needs --zeta and no --alpha");
  }
  if ((cmd == "stats" || cmd == "squeeze") && (c.alpha || c.zeta)) {
    throw ConfigError(cmd + " takes the state parameter from --r / --theta, not --alpha / --zeta");
  }
}

nlohmann::json to_json(const RunConfig& c) {
  auto cplx = [](const std::optional<std::complex<double>>& z) {
    return z ? nlohmann::json::array({z->real(), z->imag()}) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["command"] = c.command;
  j["n_max"] = c.n_max;
  j["tolerance"] = c.tolerance;
  j["alpha"] = cplx(c.alpha);
  j["zeta"] = cplx(c.zeta);
  j["r"] = c.r ? nlohmann::json(*c.r) : nlohmann::json(nullptr);
  j["theta"] = c.theta ? nlohmann::json(*c.theta) : nlohmann::json(nullptr);
  j["window"] = c.window ? nlohmann::json(*c.window) : nlohmann::json(nullptr);
  j["resolution"] = c.resolution ? nlohmann::json(*c.resolution) : nlohmann::json(nullptr);
  j["s"] = c.s;
  j["kind"] = c.kind;
  j["level"] = c.level;
  j["terms"] = c.terms;
  j["out"] = c.output_path;
  j["format"] = c.format;
  return j;
}

std::string config_hash(const RunConfig& c) {
  nlohmann::json j = to_json(c);
  j.erase("out");
  const std::string text = j.dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string resolved_output_path(const RunConfig& c) {
  if (!c.output_path.empty()) return c.output_path;
  const char* env = std::getenv("ISONLCS_OUT_DIR");
  std::string dir = (env && *env) ? env : ".";
  if (dir.back() != '/') dir += '/';
  const bool json_native = c.command == "algebra-check" || c.command == "eigen-check" ||
                           c.command == "pfunction";
  return dir + c.command + ((json_native || c.format == "json") ? ".json" : ".csv");
}

}  // namespace isonlcs::cli
