#include "isonlcs/quasiprob.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "isonlcs/errors.hpp"
#include "isonlcs/fockspace.hpp"
#include "isonlcs/specfun.hpp"
#include "isonlcs/witnesses.hpp"

namespace isonlcs::quasiprob {

namespace {

using cplx = std::complex<double>;
using states::StateVector;

// Amplitudes below this (|c|^2 < 1e-36) are dropped from the double sums.
constexpr double kSupportFloor = 1e-36;
constexpr double kImagTolerance = 1e-9;
constexpr double kNegativeThreshold = -1e-9;

// t^a L_a^k(-y/t) for a = 0..count-1 at fixed k, stored as mantissa and
// natural-log scale so that large y cannot overflow.
struct ScaledSequence {
  std::vector<double> mantissa;
  std::vector<double> log_scale;
};

ScaledSequence weighted_laguerre(int count, int k, double t, double y) {
  constexpr double kRescale = 1e200;
  const double log_rescale = std::log(kRescale);
  ScaledSequence out{std::vector<double>(count), std::vector<double>(count)};
  double scale = 0.0;
  double prev = 0.0;
  double curr = 1.0;
  for (int a = 0; a < count; ++a) {
    out.mantissa[a] = curr;
    out.log_scale[a] = scale;
    // (a+1) M_{a+1} = ((2a+1+k) t + y) M_a - (a+k) t^2 M_{a-1}
    const double next = (((2.0 * a + 1.0 + k) * t + y) * curr - (a + k) * t * t * prev) / (a + 1.0);
    prev = curr;
    curr = next;
    if (std::abs(curr) > kRescale) {
      prev /= kRescale;
      curr /= kRescale;
      scale += log_rescale;
    }
  }
  return out;
}

void require_in_basis(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("displacement_element: negative index");
}

}  // namespace

std::string kind_name(GridKind kind) {
  switch (kind) {
    case GridKind::Wigner: return "wigner";
    case GridKind::Husimi: return "husimi";
    case GridKind::Quadrature: return "quadrature";
    case GridKind::SGeneral: return "s_general";
  }
  return "unknown";
}

double PhaseGrid::x(int ix) const {
  return resolution.nx == 1 ? window.x_min : window.x_min + ix * dx();
}
double PhaseGrid::y(int iy) const {
  return resolution.ny == 1 ? window.y_min : window.y_min + iy * dy();
}
double PhaseGrid::dx() const {
  return resolution.nx > 1 ? (window.x_max - window.x_min) / (resolution.nx - 1) : 0.0;
}
double PhaseGrid::dy() const {
  return resolution.ny > 1 ? (window.y_max - window.y_min) / (resolution.ny - 1) : 0.0;
}

std::vector<double> linspace(double a, double b, int points) {
  if (points < 1) throw DomainError("linspace: need at least one point");
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) out[i] = points == 1 ? a : a + (b - a) * i / (points - 1);
  return out;
}

ComplexVector quadrature_eigenvector(double x, double phi, const TruncatedBasis& basis) {
  const std::vector<double> h = specfun::hermite_functions(basis.n_max(), x);
  ComplexVector out(basis.dim());
  for (int n = 0; n < basis.dim(); ++n) out(n) = h[n] * std::polar(1.0, n * phi);
  return out;
}

double quadrature_density(const StateVector& state, double x, double phi) {
  const int top = state.support(kSupportFloor);
  const std::vector<double> h = specfun::hermite_functions(top, x);
  cplx amp = 0.0;
  for (int n = 0; n <= top; ++n) amp += h[n] * std::polar(1.0, -n * phi) * state[n];
  return std::norm(amp);
}

PhaseGrid quadrature_distribution(const StateVector& state, std::span<const double> xs,
                                  std::span<const double> phis) {
  if (xs.empty() || phis.empty()) throw UsageError("quadrature_distribution: empty grid");
  PhaseGrid grid{GridKind::Quadrature,
                 0.0,
                 {xs.front(), xs.back(), phis.front(), phis.back()},
                 {static_cast<int>(xs.size()), static_cast<int>(phis.size())},
                 {}};
  grid.values.reserve(xs.size() * phis.size());
  for (double x : xs) {
    for (double phi : phis) grid.values.push_back(quadrature_density(state, x, phi));
  }
  return grid;
}

cplx displacement_element(int m, int n, cplx lambda) {
  require_in_basis(m, n);
  if (m < n) return std::conj(displacement_element(n, m, -lambda));
  const double r2 = std::norm(lambda);
  const int k = m - n;
  if (r2 == 0.0) return k == 0 ? 1.0 : 0.0;
  const auto& lf = specfun::log_factorial_table();
  const double log_mag = -0.5 * r2 + 0.5 * (lf(n) - lf(m)) + 0.5 * k * std::log(r2);
  return std::polar(std::exp(log_mag), k * std::arg(lambda)) *
         specfun::assoc_laguerre(n, k, r2);
}

OperatorMatrix displacement_matrix(const TruncatedBasis& basis, cplx lambda) {
  ComplexMatrix d(basis.dim(), basis.dim());
  for (int m = 0; m < basis.dim(); ++m) {
    for (int n = 0; n < basis.dim(); ++n) d(m, n) = displacement_element(m, n, lambda);
  }
  return OperatorMatrix(basis, std::move(d), "D");
}

double s_function(const StateVector& state, cplx z, double s) {
  if (!(s < 1.0)) {
    throw DomainError("s_function: s >= 1 is a singular distribution; use p_function_coefficients");
  }
  const int count = state.support(kSupportFloor) + 1;
  const auto& lf = specfun::log_factorial_table();
  const double one_minus_s = 1.0 - s;
  const double t = (s + 1.0) / (s - 1.0);
  const double y = 4.0 * std::norm(z) / (one_minus_s * one_minus_s);
  const cplx w = 2.0 * z / one_minus_s;
  const double log_w = std::log(std::abs(w));
  const double log_front = std::log(2.0 / one_minus_s) - 2.0 * std::norm(z) / one_minus_s;

  // rho_{a,b} <b|T|a> over b = a + k >= a; the b < a half is the conjugate
  // branch, <a|T|b> = conj(<b|T|a>).
  cplx total = 0.0;
  for (int k = 0; k < count; ++k) {
    if (k > 0 && std::abs(w) == 0.0) break;
    const ScaledSequence lag = weighted_laguerre(count - k, k, t, y);
    const cplx phase = std::polar(1.0, k * std::arg(w));
    for (int a = 0; a + k < count; ++a) {
      const int b = a + k;
      const double log_mag =
          log_front + 0.5 * (lf(a) - lf(b)) + (k == 0 ? 0.0 : k * log_w) + lag.log_scale[a];
      const cplx t_ba = std::exp(log_mag) * lag.mantissa[a] * phase;
      const cplx rho_ab = state[a] * std::conj(state[b]);
      total += rho_ab * t_ba;
      if (k > 0) total += std::conj(rho_ab) * std::conj(t_ba);
    }
  }
  total /= std::numbers::pi;
  if (std::abs(total.imag()) > kImagTolerance) {
    throw InvariantError("s_function: imaginary part " + std::to_string(total.imag()));
  }
  return total.real();
}

double husimi_overlap(const StateVector& state, cplx z) {
  const int top = state.support(kSupportFloor);
  const auto& lf = specfun::log_factorial_table();
  const double r = std::abs(z);
  cplx amp = state[0] * std::exp(-0.5 * r * r);
  for (int n = 1; n <= top && r > 0.0; ++n) {
    const double log_mag = -0.5 * r * r + n * std::log(r) - 0.5 * lf(n);
    amp += std::polar(std::exp(log_mag), -n * std::arg(z)) * state[n];
  }
  return std::norm(amp) / std::numbers::pi;
}

double husimi_closed_form(cplx alpha, cplx z) {
  const double n = states::nlcs_normalization_constant(alpha);
  return n * n / std::numbers::pi * std::exp(-std::norm(z));
}

PhaseGrid phase_grid(const StateVector& state, GridKind kind, double s, const Window& window,
                     const Resolution& resolution) {
  if (resolution.nx < 1 || resolution.ny < 1) throw UsageError("phase_grid: empty resolution");
  double order = s;
  if (kind == GridKind::Wigner) order = 0.0;
  if (kind == GridKind::Husimi) order = -1.0;
  if (kind == GridKind::Quadrature) throw UsageError("phase_grid: use quadrature_distribution");
  PhaseGrid grid{kind, order, window, resolution, {}};
  grid.values.resize(static_cast<std::size_t>(resolution.nx) * resolution.ny);
  for (int ix = 0; ix < resolution.nx; ++ix) {
    for (int iy = 0; iy < resolution.ny; ++iy) {
      grid.values[static_cast<std::size_t>(ix) * resolution.ny + iy] =
          s_function(state, cplx(grid.x(ix), grid.y(iy)), order);
    }
  }
  return grid;
}

Window default_window(const StateVector& state) {
  const auto k = fockspace::rescaled_ladders(state.basis(), fockspace::RescaleCase::III);
  const cplx mu = witnesses::expectation(state, k.lower);
  const double mean = witnesses::expectation(state, k.number).real();
  const double half = 6.0 * std::max(1.0, std::sqrt(std::max(mean, 0.0)));
  return {mu.real() - half, mu.real() + half, mu.imag() - half, mu.imag() + half};
}

double grid_integral(const PhaseGrid& grid) {
  double acc = 0.0;
  for (double v : grid.values) acc += v;
  return acc * grid.dx() * grid.dy();
}

NegativityScan negativity_of(const PhaseGrid& grid) {
  if (grid.values.empty()) throw UsageError("negativity_of: empty grid");
  const auto it = std::min_element(grid.values.begin(), grid.values.end());
  const auto idx = static_cast<int>(it - grid.values.begin());
  const auto negative = std::count_if(grid.values.begin(), grid.values.end(),
                                      [](double v) { return v < kNegativeThreshold; });
  return {*it, cplx(grid.x(idx / grid.resolution.ny), grid.y(idx % grid.resolution.ny)),
          static_cast<double>(negative) / static_cast<double>(grid.values.size())};
}

NegativityScan wigner_negativity_scan(const StateVector& state, const Window& window,
                                      const Resolution& resolution) {
  return negativity_of(phase_grid(state, GridKind::Wigner, 0.0, window, resolution));
}

SingularP p_function_coefficients(const StateVector& state) {
  if (state.kind() != states::StateKind::NonlinearCoherent) {
    throw UnsupportedStateError("p_function_coefficients: only defined for nonlinear coherent states (got " +
                                state.label() + ")");
  }
  const double r = std::abs(state.parameter());
  if (r == 0.0) return {{1.0}, 0};
  constexpr int kTerms = specfun::kLogFactorialTableSize - 4;
  std::vector<double> log_b(kTerms);
  for (int n = 0; n < kTerms; ++n) log_b[n] = specfun::log_term_nlcs(n, std::log(r));
  const double log_z = specfun::log_sum_exp(log_b);
  const double cutoff = log_b[0] + std::log(1e-16);
  SingularP out{{}, 0};
  for (int n = 0; n < kTerms && log_b[n] >= cutoff; ++n) {
    out.coefficients.push_back((n % 2 == 0 ? 1.0 : -1.0) * std::exp(log_b[n] - log_z));
  }
  out.max_order = static_cast<int>(out.coefficients.size()) - 1;
  return out;
}

}  // namespace isonlcs::quasiprob
