#include "isonlcs/witnesses.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "isonlcs/errors.hpp"

namespace isonlcs::witnesses {

namespace {

using states::StateVector;
using cplx = std::complex<double>;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kHermitianTolerance = 1e-12;

double hermitian_value(cplx v, const char* what) {
  if (std::abs(v.imag()) > kHermitianTolerance * std::max(1.0, std::abs(v.real()))) {
    throw InvariantError(std::string(what) + ": imaginary part " + std::to_string(v.imag()) +
                         " on a Hermitian expectation");
  }
  return v.real();
}

void require_margin(const StateVector& state, const char* where) {
  const int needed = state.support() + kPowerMargin;
  if (needed > state.basis().n_max()) {
    throw TruncationError(std::string(where) + ": state support " +
                              std::to_string(state.support()) + " leaves fewer than " +
                              std::to_string(kPowerMargin) + " free levels below n_max = " +
                              std::to_string(state.basis().n_max()),
                          needed);
  }
}

double hankel_det(double a, double b, double c, double d) {
  // det [[1, a, b], [a, b, c], [b, c, d]]
  return (b * d - c * c) - a * (a * d - b * c) + b * (a * c - b * b);
}

// Products of the ladder operators used by every squeezing condition.
struct SqueezeOperators {
  explicit SqueezeOperators(const fockspace::LadderTriple& k)
      : lower(k.lower),
        raise(k.raise),
        lower2(k.lower * k.lower),
        raise2(k.raise * k.raise),
        number(k.raise * k.lower),
        lower4(lower2 * lower2),
        raise4(raise2 * raise2),
        raise2_lower2(raise2 * lower2),
        lower2_raise2(lower2 * raise2),
        x((1.0 / std::numbers::sqrt2) * (raise + lower)),
        p(cplx(0.0, 1.0 / std::numbers::sqrt2) * (raise - lower)),
        big_x((1.0 / std::numbers::sqrt2) * (raise2 + lower2)),
        big_p(cplx(0.0, 1.0 / std::numbers::sqrt2) * (raise2 - lower2)),
        x2(x * x),
        p2(p * p),
        big_x2(big_x * big_x),
        big_p2(big_p * big_p) {}

  OperatorMatrix lower, raise, lower2, raise2, number, lower4, raise4, raise2_lower2,
      lower2_raise2, x, p, big_x, big_p, x2, p2, big_x2, big_p2;
};

double variance(const StateVector& s, const OperatorMatrix& op, const OperatorMatrix& op2,
                const char* what) {
  const double mean = hermitian_value(expectation(s, op), what);
  return hermitian_value(expectation(s, op2), what) - mean * mean;
}

void fill_quad(SqueezeReport& rep, const StateVector& s, const SqueezeOperators& k) {
  const cplx em = expectation(s, k.lower);
  const cplx ep = expectation(s, k.raise);
  const cplx em2 = expectation(s, k.lower2);
  const cplx ep2 = expectation(s, k.raise2);
  const cplx epm = expectation(s, k.number);
  const cplx i1 = em2 + ep2 - em * em - ep * ep - 2.0 * em * ep + 2.0 * epm;
  const cplx i2 = -em2 - ep2 + em * em + ep * ep - 2.0 * em * ep + 2.0 * epm;
  rep.i1 = hermitian_value(i1, "I1");
  rep.i2 = hermitian_value(i2, "I2");
  rep.var_x = variance(s, k.x, k.x2, "var x");
  rep.var_p = variance(s, k.p, k.p2, "var p");
}

void fill_amp2(SqueezeReport& rep, const StateVector& s, const SqueezeOperators& k) {
  const cplx em2 = expectation(s, k.lower2);
  const cplx ep2 = expectation(s, k.raise2);
  const cplx em4 = expectation(s, k.lower4);
  const cplx ep4 = expectation(s, k.raise4);
  const cplx ep2m2 = expectation(s, k.raise2_lower2);
  const cplx em2p2 = expectation(s, k.lower2_raise2);
  const cplx epm = expectation(s, k.number);
  const cplx i3 = 0.25 * (em4 + ep4 - em2 * em2 - ep2 * ep2 - 2.0 * em2 * ep2 + ep2m2 + em2p2) -
                  epm - 0.5;
  const cplx i4 = 0.25 * (-em4 - ep4 + em2 * em2 + ep2 * ep2 - 2.0 * em2 * ep2 + ep2m2 + em2p2) -
                  epm - 0.5;
  rep.i3 = hermitian_value(i3, "I3");
  rep.i4 = hermitian_value(i4, "I4");
  rep.var_X = variance(s, k.big_x, k.big_x2, "var X");
  rep.var_P = variance(s, k.big_p, k.big_p2, "var P");
}

enum class Conditions { Quad, Amp2, Both };

std::vector<SqueezeReport> sweep(StateFamily family, std::span<const double> thetas, double r,
                                 const TruncatedBasis& basis, Conditions which) {
  const SqueezeOperators k(fockspace::rescaled_ladders(basis, fockspace::RescaleCase::III));
  std::vector<SqueezeReport> out;
  out.reserve(thetas.size());
  for (double theta : thetas) {
    const StateVector s = build_family_state(family, std::polar(r, theta), basis);
    SqueezeReport rep{r, theta, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
    if (which != Conditions::Amp2) fill_quad(rep, s, k);
    if (which != Conditions::Quad) {
      require_margin(s, "amp2_squeeze");
      fill_amp2(rep, s, k);
    }
    out.push_back(rep);
  }
  return out;
}

}  // namespace

std::complex<double> expectation(const StateVector& state, const OperatorMatrix& op) {
  require_same_basis(state.basis(), op.basis(), "expectation");
  const ComplexVector& c = state.amplitudes();
  return c.dot(op.entries() * c);
}

MomentSet moment_set(const StateVector& state, const fockspace::LadderTriple& ladders) {
  require_margin(state, "moment_set");
  MomentSet out{{}, {}, state.label()};
  OperatorMatrix raise_j = ladders.raise;
  OperatorMatrix lower_j = ladders.lower;
  OperatorMatrix number_j = ladders.number;
  for (int j = 1; j <= 4; ++j) {
    if (j > 1) {
      raise_j = raise_j * ladders.raise;
      lower_j = ladders.lower * lower_j;
      number_j = number_j * ladders.number;
    }
    // j = 1: K+ K- is the very product stored as K0, so m1 and mu1 coincide bitwise.
    const OperatorMatrix normal = j == 1 ? ladders.number : raise_j * lower_j;
    out.m[j - 1] = hermitian_value(expectation(state, normal), "m_j");
    out.mu[j - 1] = hermitian_value(expectation(state, number_j), "mu_j");
  }
  return out;
}

MomentSet moment_set(const StateVector& state) {
  return moment_set(state, fockspace::rescaled_ladders(state.basis(), fockspace::RescaleCase::III));
}

A3Result a3_parameter(const MomentSet& ms) {
  const double det_m = hankel_det(ms.m[0], ms.m[1], ms.m[2], ms.m[3]);
  const double det_mu = hankel_det(ms.mu[0], ms.mu[1], ms.mu[2], ms.mu[3]);
  const double denom = det_mu - det_m;
  if (denom == 0.0) return {kNaN, det_m, det_mu, true};
  return {det_m / denom, det_m, det_mu, false};
}

PhotonStatistics mandel_g2(const StateVector& state) {
  const auto k = fockspace::rescaled_ladders(state.basis(), fockspace::RescaleCase::III);
  const double mean = hermitian_value(expectation(state, k.number), "<K0>");
  const double second = hermitian_value(expectation(state, k.number * k.number), "<K0^2>");
  if (mean == 0.0) return {mean, kNaN, kNaN, false};
  return {mean, second / mean - mean - 1.0, (second - mean) / (mean * mean), true};
}

SqueezeReport squeeze_report(const StateVector& state, const fockspace::LadderTriple& ladders) {
  const SqueezeOperators k(ladders);
  const double r = std::abs(state.parameter());
  SqueezeReport rep{r, std::arg(state.parameter()), kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
  fill_quad(rep, state, k);
  require_margin(state, "squeeze_report");
  fill_amp2(rep, state, k);
  return rep;
}

states::StateVector build_family_state(StateFamily family, std::complex<double> parameter,
                                       const TruncatedBasis& basis) {
  return family == StateFamily::NonlinearCoherent ? states::nlcs_build(parameter, basis)
                                                  : states::canonical_build(parameter, basis);
}

std::vector<SqueezeReport> quad_squeeze(StateFamily family, std::span<const double> thetas,
                                        double r, const TruncatedBasis& basis) {
  return sweep(family, thetas, r, basis, Conditions::Quad);
}

std::vector<SqueezeReport> amp2_squeeze(StateFamily family, std::span<const double> thetas,
                                        double r, const TruncatedBasis& basis) {
  return sweep(family, thetas, r, basis, Conditions::Amp2);
}

std::vector<SqueezeReport> squeeze_sweep(StateFamily family, std::span<const double> thetas,
                                         double r, const TruncatedBasis& basis) {
  return sweep(family, thetas, r, basis, Conditions::Both);
}

std::vector<double> default_theta_grid(int points) {
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) out[i] = 2.0 * std::numbers::pi * i / points;
  return out;
}

std::vector<double> default_r_grid(int points, double r_max) {
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) out[i] = r_max * (i + 1) / points;
  return out;
}

}  // namespace isonlcs::witnesses
