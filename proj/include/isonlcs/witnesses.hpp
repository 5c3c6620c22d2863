#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "isonlcs/fockspace.hpp"
#include "isonlcs/states.hpp"

namespace isonlcs::witnesses {

// Margin of empty levels required above the state support for fourth powers
// of the ladder operators.
inline constexpr int kPowerMargin = 8;

// <psi|O|psi>.
std::complex<double> expectation(const states::StateVector& state, const OperatorMatrix& op);

// m_j = <K+^j K-^j>, mu_j = <(K+ K-)^j>, j = 1..4.
struct MomentSet {
  std::array<double, 4> m;
  std::array<double, 4> mu;
  std::string state_label;
};

MomentSet moment_set(const states::StateVector& state, const fockspace::LadderTriple& ladders);
MomentSet moment_set(const states::StateVector& state);

struct A3Result {
  double value;
  double det_m;
  double det_mu;
  bool degenerate;  // det mu - det m == 0; value is NaN
};

// A3 = det m / (det mu - det m) on the 3x3 Hankel matrices of the moments.
A3Result a3_parameter(const MomentSet& moments);

struct PhotonStatistics {
  double mean;    // <K0>
  double q;       // <K0^2>/<K0> - <K0> - 1
  double g2;      // (<K0^2> - <K0>) / <K0>^2
  bool defined;   // false when <K0> == 0; q and g2 are NaN
};

PhotonStatistics mandel_g2(const states::StateVector& state);

struct SqueezeReport {
  double r;
  double theta;
  double i1, i2, i3, i4;
  double var_x, var_p;   // x = (K+ + K-)/sqrt2, p = i(K+ - K-)/sqrt2
  double var_X, var_P;   // X = (K+^2 + K-^2)/sqrt2, P = i(K+^2 - K-^2)/sqrt2
};

// I1..I4 and the four variances for one state. Expectations are formed from
// the ladder moments exactly as in the squeezing conditions; the variances
// come from the quadrature operators themselves.
SqueezeReport squeeze_report(const states::StateVector& state,
                             const fockspace::LadderTriple& ladders);

enum class StateFamily { NonlinearCoherent, Canonical };

states::StateVector build_family_state(StateFamily family, std::complex<double> parameter,
                                       const TruncatedBasis& basis);

// Quadrature conditions (I1, I2, var_x, var_p) for states of the family at
// parameter r e^{i theta}, one report per theta. I3/I4 fields are left NaN.
std::vector<SqueezeReport> quad_squeeze(StateFamily family, std::span<const double> thetas,
                                        double r, const TruncatedBasis& basis);

// Amplitude-squared conditions (I3, I4, var_X, var_P); I1/I2 fields are NaN.
// Throws TruncationError when the state support leaves fewer than
// kPowerMargin empty levels.
std::vector<SqueezeReport> amp2_squeeze(StateFamily family, std::span<const double> thetas,
                                        double r, const TruncatedBasis& basis);

// Both sets of conditions per theta.
std::vector<SqueezeReport> squeeze_sweep(StateFamily family, std::span<const double> thetas,
                                         double r, const TruncatedBasis& basis);

// Uniform grids: theta over [0, 2 pi), r over (0, r_max].
std::vector<double> default_theta_grid(int points = 720);
std::vector<double> default_r_grid(int points = 100, double r_max = 10.0);

}  // namespace isonlcs::witnesses
