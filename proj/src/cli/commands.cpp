#include "isonlcs/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <variant>

#include "isonlcs/cli/output.hpp"
#include "isonlcs/eigenbasis.hpp"
#include "isonlcs/errors.hpp"
#include "isonlcs/fockspace.hpp"
#include "isonlcs/quasiprob.hpp"
#include "isonlcs/states.hpp"
#include "isonlcs/witnesses.hpp"

namespace isonlcs::cli {

namespace {

using Artifact = std::variant<Table, nlohmann::json>;

constexpr double kGramTolerance = 1e-8;
constexpr double kEigenResidualTolerance = 1e-6;

struct Outcome {
  Artifact artifact;
  int status = kExitOk;
  nlohmann::json extra;  // written to <out>.verdict.json when non-null
};

states::StateVector state_from(const RunConfig& c, const TruncatedBasis& basis) {
  if (c.alpha) return states::nlcs_build(*c.alpha, basis);
  return states::canonical_build(*c.zeta, basis);
}

Outcome algebra_check(const RunConfig& c) {
  const TruncatedBasis basis(c.n_max);
  nlohmann::json j;
  int status = kExitOk;
  for (auto id : fockspace::kAllIdentities) {
    const double res = fockspace::algebra_residual(basis, id);
    j[std::string(fockspace::identity_name(id))] = res;
    if (!(res < c.tolerance)) status = kExitInvariant;
  }
  const auto cas = fockspace::casimir_report(basis);
  j["CASIMIR_VALUE"] = cas.value;
  j["CASIMIR_ORDERING_GAP"] = cas.ordering_gap;
  if (!(cas.value < c.tolerance) || !(cas.ordering_gap < c.tolerance)) status = kExitInvariant;
  j["n_max"] = c.n_max;
  j["tolerance"] = c.tolerance;
  return {j, status, nullptr};
}

Outcome eigen(const RunConfig& c) {
  const double x0 = c.window ? (*c.window)[0] : -8.0;
  const double x1 = c.window ? (*c.window)[1] : 8.0;
  const int nx = c.resolution ? (*c.resolution)[0] : 161;
  const auto xs = quasiprob::linspace(x0, x1, nx);
  const auto ef = eigenbasis::eigenfunction(c.level, xs);
  Table t{{"x", "psi_n", "dpsi_n"}, {}};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    t.rows.push_back({xs[i], ef.values[i], ef.derivative_values[i]});
  }
  return {t, kExitOk, nullptr};
}

Outcome eigen_check(const RunConfig&) {
  const auto& rule = eigenbasis::default_rule();
  std::vector<int> levels = {0};
  for (int n = 3; n <= 12; ++n) levels.push_back(n);
  const Eigen::MatrixXd gram = eigenbasis::gram_matrix(levels, rule);
  const double gram_dev =
      (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();

  nlohmann::json j;
  int status = gram_dev < kGramTolerance ? kExitOk : kExitInvariant;
  j["gram_max_deviation"] = gram_dev;
  j["levels"] = levels;

  nlohmann::json schr = nlohmann::json::object();
  for (int n : levels) {
    const double r = eigenbasis::schrodinger_residual(n, rule);
    schr[std::to_string(n)] = r;
    if (!(r < kEigenResidualTolerance)) status = kExitInvariant;
  }
  j["schrodinger_residual"] = schr;

  nlohmann::json lower = nlohmann::json::object();
  nlohmann::json raise = nlohmann::json::object();
  for (int n = 4; n <= 10; ++n) {
    const double rl = eigenbasis::ladder_residual(n, eigenbasis::LadderDirection::Lower, rule);
    const double rr = eigenbasis::ladder_residual(n, eigenbasis::LadderDirection::Raise, rule);
    lower[std::to_string(n)] = rl;
    raise[std::to_string(n)] = rr;
    if (!(rl < kEigenResidualTolerance) || !(rr < kEigenResidualTolerance)) status = kExitInvariant;
  }
  j["ladder_residual_lower"] = lower;
  j["ladder_residual_raise"] = raise;

  auto annihilated = [&](int n, eigenbasis::LadderDirection d) {
    const auto g = eigenbasis::apply_differential_ladder(n, d, rule.nodes);
    return eigenbasis::l2_norm(rule, g.values);
  };
  const double lower3 = annihilated(3, eigenbasis::LadderDirection::Lower);
  const double lower0 = annihilated(0, eigenbasis::LadderDirection::Lower);
  const double raise0 = annihilated(0, eigenbasis::LadderDirection::Raise);
  j["norm_lower_psi3"] = lower3;
  j["norm_lower_psi0"] = lower0;
  j["norm_raise_psi0"] = raise0;
  for (double v : {lower3, lower0, raise0}) {
    if (!(v < kEigenResidualTolerance)) status = kExitInvariant;
  }
  return {j, status, nullptr};
}

Outcome state(const RunConfig& c) {
  const TruncatedBasis basis(c.n_max);
  const auto psi = state_from(c, basis);
  Table t{{"n", "re_c", "im_c", "P_n"}, {}};
  for (int n = 0; n < basis.dim(); ++n) {
    t.rows.push_back({static_cast<double>(n), psi[n].real(), psi[n].imag(), psi.probability(n)});
  }
  return {t, kExitOk, nullptr};
}

Outcome dual_check(const RunConfig& c) {
  const auto rep = states::dual_series_diagnose(*c.alpha, c.terms);
  Table t{{"n", "log_term", "log_ratio"}, {}};
  for (std::size_t n = 0; n < rep.term_log_magnitudes.size(); ++n) {
    const double ratio = n == 0 ? std::nan("") : rep.ratio_trend[n - 1];
    t.rows.push_back({static_cast<double>(n), rep.term_log_magnitudes[n], ratio});
  }
  nlohmann::json v;
  v["verdict"] = states::verdict_name(rep.verdict);
  v["alpha_modulus"] = rep.alpha_modulus;
  v["terms"] = c.terms;
  return {t, kExitOk, v};
}

std::vector<double> stats_row(const states::StateVector& psi, double r) {
  const auto a3 = witnesses::a3_parameter(witnesses::moment_set(psi));
  const auto ps = witnesses::mandel_g2(psi);
  return {r, a3.value, ps.q, ps.g2, ps.mean};
}

Outcome stats(const RunConfig& c) {
  const TruncatedBasis basis(c.n_max);
  const double theta = c.theta.value_or(0.0);
  const std::vector<double> rs = c.r ? std::vector<double>{*c.r} : witnesses::default_r_grid();
  Table t{{"r", "A3", "Q", "g2", "meanK0"}, {}};
  for (double r : rs) {
    t.rows.push_back(stats_row(states::nlcs_build(std::polar(r, theta), basis), r));
  }
  return {t, kExitOk, nullptr};
}

Outcome canonical_stats(const RunConfig& c) {
  const TruncatedBasis basis(c.n_max);
  const auto psi = states::canonical_build(*c.zeta, basis);
  Table t{{"r", "A3", "Q", "g2", "meanK0"}, {stats_row(psi, std::abs(*c.zeta))}};
  return {t, kExitOk, nullptr};
}

Outcome squeeze(const RunConfig& c) {
  const TruncatedBasis basis(c.n_max);
  const double r = c.r.value_or(5.0);
  const std::vector<double> thetas =
      c.theta ? std::vector<double>{*c.theta} : witnesses::default_theta_grid();
  const auto reports =
      witnesses::squeeze_sweep(witnesses::StateFamily::NonlinearCoherent, thetas, r, basis);
  Table t{{"theta", "I1", "I2", "I3", "I4", "var_x", "var_p"}, {}};
  for (const auto& s : reports) t.rows.push_back({s.theta, s.i1, s.i2, s.i3, s.i4, s.var_x, s.var_p});
  return {t, kExitOk, nullptr};
}

Outcome quadrature_dist(const RunConfig& c) {
  const TruncatedBasis basis(c.n_max);
  const auto psi = state_from(c, basis);
  quasiprob::Window w;
  if (c.window) {
    const auto& a = *c.window;
    w = {a[0], a[1], a[2], a[3]};
  } else {
    const auto ladders = fockspace::rescaled_ladders(basis, fockspace::RescaleCase::III);
    const double mean = witnesses::expectation(psi, ladders.number).real();
    const double shift = std::sqrt(2.0) * std::abs(witnesses::expectation(psi, ladders.lower));
    const double half = shift + 6.0 * std::max(1.0, std::sqrt(std::max(mean, 0.0)));
    w = {-half, half, 0.0, 2.0 * std::numbers::pi};
  }
  const int nx = c.resolution ? (*c.resolution)[0] : 121;
  const int nphi = c.resolution ? (*c.resolution)[1] : 73;
  const auto xs = quasiprob::linspace(w.x_min, w.x_max, nx);
  const auto phis = quasiprob::linspace(w.y_min, w.y_max, nphi);
  const auto grid = quasiprob::quadrature_distribution(psi, xs, phis);
  Table t{{"x", "phi", "value"}, {}};
  for (int i = 0; i < nx; ++i) {
    for (int k = 0; k < nphi; ++k) t.rows.push_back({grid.x(i), grid.y(k), grid.at(i, k)});
  }
  return {t, kExitOk, nullptr};
}

Outcome quasiprob_grid(const RunConfig& c) {
  const TruncatedBasis basis(c.n_max);
  const auto psi = state_from(c, basis);
  quasiprob::GridKind kind = quasiprob::GridKind::Wigner;
  double s = 0.0;
  if (c.kind == "husimi") {
    kind = quasiprob::GridKind::Husimi;
    s = -1.0;
  } else if (c.kind == "sgeneral") {
    kind = quasiprob::GridKind::SGeneral;
    s = c.s;
  }
  quasiprob::Window w = quasiprob::default_window(psi);
  if (c.window) {
    const auto& a = *c.window;
    w = {a[0], a[1], a[2], a[3]};
  }
  quasiprob::Resolution res = quasiprob::kDefaultResolution;
  if (c.resolution) res = {(*c.resolution)[0], (*c.resolution)[1]};
  const auto grid = quasiprob::phase_grid(psi, kind, s, w, res);
  Table t{{"x", "p", "value"}, {}};
  for (int i = 0; i < res.nx; ++i) {
    for (int k = 0; k < res.ny; ++k) t.rows.push_back({grid.x(i), grid.y(k), grid.at(i, k)});
  }
  return {t, kExitOk, nullptr};
}

Outcome pfunction(const RunConfig& c) {
  const TruncatedBasis basis(c.n_max);
  const auto p = quasiprob::p_function_coefficients(states::nlcs_build(*c.alpha, basis));
  nlohmann::json j;
  j["order"] = p.max_order;
  j["coefficients"] = p.coefficients;
  return {j, kExitOk, nullptr};
}

Outcome dispatch(const RunConfig& c) {
  const std::string& cmd = c.command;
  if (cmd == "algebra-check") return algebra_check(c);
  if (cmd == "eigen") return eigen(c);
  if (cmd == "eigen-check") return eigen_check(c);
  if (cmd == "state") return state(c);
  if (cmd == "dual-check") return dual_check(c);
  if (cmd == "stats") return stats(c);
  if (cmd == "squeeze") return squeeze(c);
  if (cmd == "quadrature-dist") return quadrature_dist(c);
  if (cmd == "quasiprob") return quasiprob_grid(c);
  if (cmd == "pfunction") return pfunction(c);
  if (cmd == "canonical-stats") return canonical_stats(c);
  throw ConfigError("unknown command '" + cmd + "'");
}

void write_file(const std::string& path, const std::string& what,
                const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + what + " for writing: " + path);
  body(out);
  if (!out) throw ConfigError("failed writing " + what + ": " + path);
}

}  // namespace

int run(const RunConfig& config, std::ostream& log) {
  const Outcome outcome = dispatch(config);
  const std::string path = resolved_output_path(config);
  const std::string hash = config_hash(config);

  write_file(path, "artifact", [&](std::ostream& out) {
    if (const auto* table = std::get_if<Table>(&outcome.artifact)) {
      if (config.format == "json") {
        write_table_json(out, *table, hash);
      } else {
        write_csv(out, *table, hash);
      }
    } else {
      nlohmann::json j = std::get<nlohmann::json>(outcome.artifact);
      j["config_hash"] = hash;
      write_json(out, j);
    }
  });
  write_file(path + ".config.json", "config sidecar", [&](std::ostream& out) {
    nlohmann::json j = to_json(config);
    j["config_hash"] = hash;
    write_json(out, j);
  });
  if (!outcome.extra.is_null()) {
    write_file(path + ".verdict.json", "verdict sidecar", [&](std::ostream& out) {
      nlohmann::json j = outcome.extra;
      j["config_hash"] = hash;
      write_json(out, j);
    });
    if (outcome.extra.contains("verdict")) {
      log << "verdict: " << outcome.extra["verdict"].get<std::string>() << '\n';
    }
  }
  if (outcome.status == kExitInvariant) {
    log << "invariant violated: a checked residual reached the tolerance, see " << path << '\n';
  }
  log << "wrote " << path << '\n';
  return outcome.status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& log) {
  try {
    const RunConfig config = parse_config(args);
    validate(config);
    return run(config, log);
  } catch (const HelpRequested& e) {
    log << e.what();
    return kExitOk;
  } catch (const TruncationError& e) {
    log << "invariant violated (truncation): " << e.what() << "; try --n-max "
        << e.suggested_n_max() << '\n';
    return kExitInvariant;
  } catch (const InvariantError& e) {
    log << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const ConfigError& e) {
    log << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    log << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    log << "usage error (domain): " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    log << "usage error (range): " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace isonlcs::cli
