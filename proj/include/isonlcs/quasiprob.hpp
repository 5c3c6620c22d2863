#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "isonlcs/basis.hpp"
#include "isonlcs/states.hpp"

namespace isonlcs::quasiprob {

enum class GridKind { Wigner, Husimi, Quadrature, SGeneral };

std::string kind_name(GridKind kind);

struct Window {
  double x_min, x_max, y_min, y_max;
};

struct Resolution {
  int nx, ny;
};

// Values on a uniform, endpoint-inclusive grid; values[ix * ny + iy].
struct PhaseGrid {
  GridKind kind;
  double s;
  Window window;
  Resolution resolution;
  std::vector<double> values;

  double x(int ix) const;
  double y(int iy) const;
  double dx() const;
  double dy() const;
  double at(int ix, int iy) const { return values[static_cast<std::size_t>(ix) * resolution.ny + iy]; }
};

std::vector<double> linspace(double a, double b, int points);

// <n~|x, phi> = e^{-x^2/2} pi^{-1/4} H_n(x) e^{i n phi} / sqrt(2^n n!), the
// photon-number expansion of the generalized quadrature eigenvector.
ComplexVector quadrature_eigenvector(double x, double phi, const TruncatedBasis& basis);

// |<x, phi|psi>|^2, summed once and squared.
double quadrature_density(const states::StateVector& state, double x, double phi);

// x along the first axis, phi along the second.
PhaseGrid quadrature_distribution(const states::StateVector& state, std::span<const double> xs,
                                  std::span<const double> phis);

// <m+3|D(lambda)|n+3> for D(lambda) = exp(lambda K+ - conj(lambda) K-).
std::complex<double> displacement_element(int m, int n, std::complex<double> lambda);

OperatorMatrix displacement_matrix(const TruncatedBasis& basis, std::complex<double> lambda);

// s-parameterized quasi-probability F(z, s), s < 1, via the Laguerre double
// sum over the state's support. The Laguerre factor is carried as
// t^n L_n^k(-y/t) with t = (s+1)/(s-1), y = 4|z|^2/(1-s)^2, which stays finite
// at s = -1. s >= 1 throws DomainError (see p_function_coefficients).
double s_function(const states::StateVector& state, std::complex<double> z, double s);

// (1/pi) |<z|psi>|^2 with <z|n~> = e^{-|z|^2/2} conj(z)^n / sqrt(n!).
double husimi_overlap(const states::StateVector& state, std::complex<double> z);

// N_alpha^2 / pi * e^{-|z|^2}, the closed form once proposed for the nlcs
// Husimi function. Kept as a diagnostic only; it does not match
// husimi_overlap for alpha != 0.
double husimi_closed_form(std::complex<double> alpha, std::complex<double> z);

// Wigner (s = 0), Husimi (s = -1) or general s over x + i p in the window.
PhaseGrid phase_grid(const states::StateVector& state, GridKind kind, double s,
                     const Window& window, const Resolution& resolution);

// Centered on <K->, half-width 6 max(1, <K0>^{1/2}).
Window default_window(const states::StateVector& state);
inline constexpr Resolution kDefaultResolution{201, 201};

// Riemann sum over the grid cells.
double grid_integral(const PhaseGrid& grid);

struct NegativityScan {
  double min_value;
  std::complex<double> min_location;
  double negative_fraction;  // share of grid points below -1e-9
};

NegativityScan wigner_negativity_scan(const states::StateVector& state, const Window& window,
                                      const Resolution& resolution);
NegativityScan negativity_of(const PhaseGrid& grid);

// Coefficients (-1)^n B_{n,n} of e^{|z|^2} d^n/d(|z|^2)^n delta(|z|^2) in the
// P-function of a nonlinear coherent state, kept while B_{n,n} >= 1e-16 B_{0,0}.
struct SingularP {
  std::vector<double> coefficients;
  int max_order;  // index of the last retained coefficient
};

SingularP p_function_coefficients(const states::StateVector& state);

}  // namespace isonlcs::quasiprob
