#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace isonlcs::eigenbasis {

// Bound-state levels are n = 0, 3, 4, 5, ...; n = 1, 2 are absent from the
// spectrum and rejected with DomainError.
bool is_level(int n) noexcept;

// P_0 = 1; P_n = H_n + 4n H_{n-2} + 4n(n-3) H_{n-4}, with H_k = 0 for k < 0.
double poly_P(int n, double x);
double poly_P_derivative(int n, double x);
double poly_P_second_derivative(int n, double x);

// N_n = [(n-1)(n-2) / (2^n n! sqrt(pi))]^{1/2}.
double normalization(int n);

// psi_n = N_n P_n(x) exp(-x^2/2) / (1 + 2x^2) and its analytic derivatives.
double psi(int n, double x);
double psi_derivative(int n, double x);
double psi_second_derivative(int n, double x);

double superpotential(double x);             // x + 4x / (1 + 2x^2)
double superpotential_derivative(double x);  // 1 + 4(1 - 2x^2) / (1 + 2x^2)^2
double potential(double x);                  // (x^2 + 8(2x^2 - 1)/(2x^2 + 1)^2) / 2
double energy(int n);                        // n - 3/2

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule gauss_legendre(double a, double b, int points);
// Gauss-Legendre, 800 nodes on [-12, 12].
const QuadratureRule& default_rule();

struct GridFunction {
  std::vector<double> x;
  std::vector<double> values;
  std::vector<double> derivatives;  // empty when not carried
};

struct EigenFunction {
  int n;
  std::vector<double> grid_x;
  std::vector<double> values;
  std::vector<double> derivative_values;
  std::vector<double> second_derivative_values;

  GridFunction as_grid_function() const { return {grid_x, values, derivative_values}; }
};

EigenFunction eigenfunction(int n, std::span<const double> grid);

// (f' + phi f) / sqrt(2) and (-f' + phi f) / sqrt(2); the input must carry
// derivatives.
GridFunction apply_partner_A(const GridFunction& f);
GridFunction apply_partner_A_dagger(const GridFunction& f);

enum class LadderDirection { Lower, Raise };

// Differential deformed ladder operators applied to psi_n:
//   sqrt2 N- = [2(2x^2-1)/(1+2x^2)^2 - 1][d/dx + phi] + [d/dx + x] N0
//   sqrt2 N+ = -2(2x^2-1)/(1+2x^2)^2 [d/dx + phi] + [-d/dx + x] N0
// with N0 psi_n = n psi_n.
GridFunction apply_differential_ladder(int n, LadderDirection direction,
                                       std::span<const double> grid);

double inner(const QuadratureRule& rule, std::span<const double> f, std::span<const double> g);
double l2_norm(const QuadratureRule& rule, std::span<const double> f);

Eigen::MatrixXd gram_matrix(std::span<const int> levels, const QuadratureRule& rule);

// || -psi''/2 + V psi - E_n psi ||_2.
double schrodinger_residual(int n, const QuadratureRule& rule);

// || N+- psi_n - c psi_{n+-1} ||_2 / ||psi_n||_2 with c the matrix element
// sqrt(n) f(n) (lower) or sqrt(n+1) f(n+1) (raise); the target is zero where
// the matrix element vanishes or the neighbour level does not exist.
double ladder_residual(int n, LadderDirection direction, const QuadratureRule& rule);

}  // namespace isonlcs::eigenbasis
