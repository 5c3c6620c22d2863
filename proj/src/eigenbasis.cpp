#include "isonlcs/eigenbasis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <gsl/gsl_integration.h>

#include "isonlcs/errors.hpp"
#include "isonlcs/fockspace.hpp"
#include "isonlcs/specfun.hpp"

namespace isonlcs::eigenbasis {

namespace {

void require_level(int n, const char* where) {
  if (!is_level(n)) {
    throw DomainError(std::string(where) + ": level " + std::to_string(n) +
                      " is not in the spectrum {0, 3, 4, 5, ...}");
  }
}

double hermite_or_zero(int k, double x) { return k < 0 ? 0.0 : specfun::hermite(k, x); }

// d/dx H_k = 2k H_{k-1}; d2/dx2 H_k = 4k(k-1) H_{k-2}.
double hermite_d1(int k, double x) { return k < 1 ? 0.0 : 2.0 * k * specfun::hermite(k - 1, x); }
double hermite_d2(int k, double x) {
  return k < 2 ? 0.0 : 4.0 * k * (k - 1) * specfun::hermite(k - 2, x);
}

template <typename HermiteFn>
double combine_P(int n, double x, HermiteFn h) {
  if (n == 0) return 0.0;
  return h(n, x) + 4.0 * n * h(n - 2, x) + 4.0 * n * (n - 3) * h(n - 4, x);
}

// e^{-x^2/2} / (1 + 2x^2); its derivative is -phi times itself.
double envelope(double x) { return std::exp(-0.5 * x * x) / (1.0 + 2.0 * x * x); }

double bracket(double x) {
  const double d = 1.0 + 2.0 * x * x;
  return 2.0 * (2.0 * x * x - 1.0) / (d * d);
}

}  // namespace

bool is_level(int n) noexcept { return n == 0 || n >= 3; }

double poly_P(int n, double x) {
  require_level(n, "poly_P");
  if (n == 0) return 1.0;
  return combine_P(n, x, hermite_or_zero);
}

double poly_P_derivative(int n, double x) {
  require_level(n, "poly_P_derivative");
  return combine_P(n, x, hermite_d1);
}

double poly_P_second_derivative(int n, double x) {
  require_level(n, "poly_P_second_derivative");
  return combine_P(n, x, hermite_d2);
}

double normalization(int n) {
  require_level(n, "normalization");
  const double log_sq = std::log(static_cast<double>((n - 1) * (n - 2))) -
                        n * std::numbers::ln2 - specfun::log_factorial(n) -
                        0.5 * std::log(std::numbers::pi);
  return std::exp(0.5 * log_sq);
}

double psi(int n, double x) { return normalization(n) * poly_P(n, x) * envelope(x); }

double psi_derivative(int n, double x) {
  const double p = poly_P(n, x);
  return normalization(n) * (poly_P_derivative(n, x) - superpotential(x) * p) * envelope(x);
}

double psi_second_derivative(int n, double x) {
  const double p = poly_P(n, x);
  const double phi = superpotential(x);
  const double g2 = phi * phi - superpotential_derivative(x);
  return normalization(n) *
         (poly_P_second_derivative(n, x) - 2.0 * phi * poly_P_derivative(n, x) + g2 * p) *
         envelope(x);
}

double superpotential(double x) { return x + 4.0 * x / (1.0 + 2.0 * x * x); }

double superpotential_derivative(double x) {
  const double d = 1.0 + 2.0 * x * x;
  return 1.0 + 4.0 * (1.0 - 2.0 * x * x) / (d * d);
}

double potential(double x) {
  const double d = 2.0 * x * x + 1.0;
  return 0.5 * (x * x + 8.0 * (2.0 * x * x - 1.0) / (d * d));
}

double energy(int n) {
  require_level(n, "energy");
  return n - 1.5;
}

QuadratureRule gauss_legendre(double a, double b, int points) {
  if (points < 1) throw DomainError("gauss_legendre: need at least one node");
  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(points);
  if (table == nullptr) throw InvariantError("gauss_legendre: GSL table allocation failed");
  QuadratureRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  for (int i = 0; i < points; ++i) {
    gsl_integration_glfixed_point(a, b, i, &rule.nodes[i], &rule.weights[i], table);
  }
  gsl_integration_glfixed_table_free(table);
  return rule;
}

const QuadratureRule& default_rule() {
  static const QuadratureRule rule = gauss_legendre(-12.0, 12.0, 800);
  return rule;
}

EigenFunction eigenfunction(int n, std::span<const double> grid) {
  require_level(n, "eigenfunction");
  EigenFunction out{n, {grid.begin(), grid.end()}, {}, {}, {}};
  out.values.reserve(grid.size());
  out.derivative_values.reserve(grid.size());
  out.second_derivative_values.reserve(grid.size());
  for (double x : grid) {
    out.values.push_back(psi(n, x));
    out.derivative_values.push_back(psi_derivative(n, x));
    out.second_derivative_values.push_back(psi_second_derivative(n, x));
  }
  return out;
}

GridFunction apply_partner_A(const GridFunction& f) {
  if (f.derivatives.size() != f.values.size()) {
    throw UsageError("apply_partner_A: input carries no derivatives");
  }
  GridFunction out{f.x, std::vector<double>(f.x.size()), {}};
  for (std::size_t i = 0; i < f.x.size(); ++i) {
    out.values[i] = (f.derivatives[i] + superpotential(f.x[i]) * f.values[i]) / std::numbers::sqrt2;
  }
  return out;
}

GridFunction apply_partner_A_dagger(const GridFunction& f) {
  if (f.derivatives.size() != f.values.size()) {
    throw UsageError("apply_partner_A_dagger: input carries no derivatives");
  }
  GridFunction out{f.x, std::vector<double>(f.x.size()), {}};
  for (std::size_t i = 0; i < f.x.size(); ++i) {
    out.values[i] = (-f.derivatives[i] + superpotential(f.x[i]) * f.values[i]) / std::numbers::sqrt2;
  }
  return out;
}

GridFunction apply_differential_ladder(int n, LadderDirection direction,
                                       std::span<const double> grid) {
  const EigenFunction ef = eigenfunction(n, grid);
  GridFunction out{ef.grid_x, std::vector<double>(grid.size()), {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const double f = ef.values[i];
    const double df = ef.derivative_values[i];
    const double partner = df + superpotential(x) * f;
    const double scaled = direction == LadderDirection::Lower
                              ? (bracket(x) - 1.0) * partner + n * (df + x * f)
                              : -bracket(x) * partner + n * (-df + x * f);
    out.values[i] = scaled / std::numbers::sqrt2;
  }
  return out;
}

double inner(const QuadratureRule& rule, std::span<const double> f, std::span<const double> g) {
  if (f.size() != rule.nodes.size() || g.size() != rule.nodes.size()) {
    throw UsageError("inner: samples do not match the quadrature rule");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += rule.weights[i] * f[i] * g[i];
  return acc;
}

double l2_norm(const QuadratureRule& rule, std::span<const double> f) {
  return std::sqrt(inner(rule, f, f));
}

Eigen::MatrixXd gram_matrix(std::span<const int> levels, const QuadratureRule& rule) {
  std::vector<std::vector<double>> samples;
  samples.reserve(levels.size());
  for (int n : levels) samples.push_back(eigenfunction(n, rule.nodes).values);
  const auto count = static_cast<Eigen::Index>(levels.size());
  Eigen::MatrixXd gram(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    for (Eigen::Index j = i; j < count; ++j) {
      gram(i, j) = gram(j, i) = inner(rule, samples[i], samples[j]);
    }
  }
  return gram;
}

double schrodinger_residual(int n, const QuadratureRule& rule) {
  const EigenFunction ef = eigenfunction(n, rule.nodes);
  const double e = energy(n);
  std::vector<double> r(rule.nodes.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = -0.5 * ef.second_derivative_values[i] + (potential(rule.nodes[i]) - e) * ef.values[i];
  }
  return l2_norm(rule, r);
}

double ladder_residual(int n, LadderDirection direction, const QuadratureRule& rule) {
  const GridFunction applied = apply_differential_ladder(n, direction, rule.nodes);
  const int target = direction == LadderDirection::Lower ? n - 1 : n + 1;
  double coeff = 0.0;
  if (n != 0 && is_level(target)) {
    const int top = direction == LadderDirection::Lower ? n : n + 1;
    coeff = std::sqrt(static_cast<double>(top)) * fockspace::deformation_f(top).value;
  }
  std::vector<double> r = applied.values;
  if (coeff != 0.0) {
    const EigenFunction t = eigenfunction(target, rule.nodes);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= coeff * t.values[i];
  }
  return l2_norm(rule, r) / l2_norm(rule, eigenfunction(n, rule.nodes).values);
}

}  // namespace isonlcs::eigenbasis
