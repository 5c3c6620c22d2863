#pragma once

#include <complex>
#include <string>
#include <vector>

#include "isonlcs/basis.hpp"

namespace isonlcs::states {

enum class StateKind { NonlinearCoherent, Canonical, Fock, Custom };

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kTailTolerance = 1e-12;
inline constexpr int kTailWindow = 10;

// Complex amplitudes c_n over the shifted basis |n~>, n~ = 0..n_max.
class StateVector {
 public:
  StateVector(TruncatedBasis basis, ComplexVector amplitudes, StateKind kind,
              std::complex<double> parameter, std::string label);

  const TruncatedBasis& basis() const noexcept { return basis_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  StateKind kind() const noexcept { return kind_; }
  std::complex<double> parameter() const noexcept { return parameter_; }
  const std::string& label() const noexcept { return label_; }

  std::complex<double> operator[](int n) const { return amplitudes_(n); }
  double probability(int n) const { return std::norm(amplitudes_(n)); }
  std::vector<double> probabilities() const;

  double norm_squared() const;
  // Mass in the last kTailWindow levels, n~ > n_max - kTailWindow.
  double tail_mass() const;
  // Highest index with |c_n|^2 > floor; 0 for the shifted vacuum.
  int support(double floor = 1e-32) const;

 private:
  TruncatedBasis basis_;
  ComplexVector amplitudes_;
  StateKind kind_;
  std::complex<double> parameter_;
  std::string label_;
};

// |alpha, f~> with c_n proportional to alpha^n / sqrt(n! (n+2)! (n+3)!),
// normalized numerically. Throws TruncationError (with a suggested n_max)
// when the tail-mass invariant fails.
StateVector nlcs_build(std::complex<double> alpha, const TruncatedBasis& basis);

// |zeta> with c_n = e^{-|zeta|^2/2} zeta^n / sqrt(n!); requires
// |zeta|^2 + 6|zeta| < n_max and a small tail.
StateVector canonical_build(std::complex<double> zeta, const TruncatedBasis& basis);

// Number state |n~>.
StateVector fock_state(int n, const TruncatedBasis& basis);

// Normalization constant N_alpha = (sum_n |alpha|^{2n} / (n!(n+2)!(n+3)!))^{-1/2}
// summed in the log domain over `terms` terms.
double nlcs_normalization_constant(std::complex<double> alpha, int terms = 400);

enum class Verdict { Diverges, Converges };

struct DivergenceReport {
  double alpha_modulus;
  std::vector<double> term_log_magnitudes;
  std::vector<double> ratio_trend;  // ln|t_{n+1}| - ln|t_n|
  Verdict verdict;
};

// Classifies a series from the logarithms of its term magnitudes. The series
// diverges when the log-ratios over the last five steps are positive and
// increasing, or when they keep increasing with steps that are not summable
// (n * step bounded away from zero), which drives them past zero eventually.
Verdict classify_series(const std::vector<double>& log_terms);

// Dual-pair series: ln|t_n| = n ln|alpha| + ln((n+3)!/6)/2 + ln((n+2)! n!/2)/2 - ln n!.
DivergenceReport dual_series_diagnose(std::complex<double> alpha, int n_terms);

// <a|b>.
std::complex<double> overlap(const StateVector& a, const StateVector& b);

std::string verdict_name(Verdict v);

}  // namespace isonlcs::states
