#include "isonlcs/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "isonlcs/errors.hpp"
#include "isonlcs/specfun.hpp"

namespace isonlcs::states {

namespace {

std::string complex_text(std::complex<double> z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

// Smallest n_max whose last kTailWindow levels carry < kTailTolerance of the
// (normalized) probability mass given by log_p over a long index range.
int suggest_n_max(const std::vector<double>& log_p) {
  const double log_z = specfun::log_sum_exp(log_p);
  const int count = static_cast<int>(log_p.size());
  // suffix[k] = mass at indices >= k
  std::vector<double> suffix(count + 1, 0.0);
  for (int k = count - 1; k >= 0; --k) suffix[k] = suffix[k + 1] + std::exp(log_p[k] - log_z);
  for (int n_max = TruncatedBasis::kMinNMax; n_max < count; ++n_max) {
    if (suffix[std::max(0, n_max - kTailWindow + 1)] < kTailTolerance) return n_max;
  }
  return count;
}

void check_built(const StateVector& s, const std::vector<double>& extended_log_p) {
  const double tail = s.tail_mass();
  if (!(tail < kTailTolerance)) {
    const int suggested = suggest_n_max(extended_log_p);
    throw TruncationError("state " + s.label() + ": tail mass " + std::to_string(tail) +
                              " in the last " + std::to_string(kTailWindow) +
                              " levels exceeds 1e-12; use n_max >= " + std::to_string(suggested),
                          suggested);
  }
  const double norm_err = std::abs(s.norm_squared() - 1.0);
  if (!(norm_err < kNormTolerance)) {
    throw InvariantError("state " + s.label() + ": normalization off by " +
                         std::to_string(norm_err));
  }
}

constexpr int kExtendedLevels = specfun::kLogFactorialTableSize - 4;

}  // namespace

StateVector::StateVector(TruncatedBasis basis, ComplexVector amplitudes, StateKind kind,
                         std::complex<double> parameter, std::string label)
    : basis_(basis),
      amplitudes_(std::move(amplitudes)),
      kind_(kind),
      parameter_(parameter),
      label_(std::move(label)) {
  if (amplitudes_.size() != basis_.dim()) {
    throw UsageError("StateVector '" + label_ + "': amplitude count does not match basis");
  }
  if (!amplitudes_.allFinite()) throw InvariantError("StateVector '" + label_ + "': non-finite amplitude");
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(static_cast<std::size_t>(amplitudes_.size()));
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) p[i] = std::norm(amplitudes_(i));
  return p;
}

double StateVector::norm_squared() const { return amplitudes_.squaredNorm(); }

double StateVector::tail_mass() const {
  double acc = 0.0;
  for (int n = std::max(0, basis_.n_max() - kTailWindow + 1); n <= basis_.n_max(); ++n) acc += probability(n);
  return acc;
}

int StateVector::support(double floor) const {
  for (int n = basis_.n_max(); n > 0; --n) {
    if (probability(n) > floor) return n;
  }
  return 0;
}

StateVector nlcs_build(std::complex<double> alpha, const TruncatedBasis& basis) {
  const std::string label = "nlcs" + complex_text(alpha);
  ComplexVector c = ComplexVector::Zero(basis.dim());
  const double r = std::abs(alpha);
  if (r == 0.0) {
    c(0) = 1.0;
    return StateVector(basis, std::move(c), StateKind::NonlinearCoherent, alpha, label);
  }
  const double log_r = std::log(r);
  const double theta = std::arg(alpha);
  std::vector<double> log_p(kExtendedLevels);
  for (int n = 0; n < kExtendedLevels; ++n) log_p[n] = specfun::log_term_nlcs(n, log_r);
  const double log_z = specfun::log_sum_exp(std::span(log_p).first(basis.dim()));
  for (int n = 0; n < basis.dim(); ++n) {
    c(n) = std::polar(std::exp(0.5 * (log_p[n] - log_z)), n * theta);
  }
  StateVector s(basis, std::move(c), StateKind::NonlinearCoherent, alpha, label);
  check_built(s, log_p);
  return s;
}

StateVector canonical_build(std::complex<double> zeta, const TruncatedBasis& basis) {
  const std::string label = "canonical" + complex_text(zeta);
  const double r = std::abs(zeta);
  const auto& lf = specfun::log_factorial_table();
  std::vector<double> log_p(kExtendedLevels);
  for (int n = 0; n < kExtendedLevels; ++n) {
    log_p[n] = (n == 0 ? 0.0 : 2.0 * n * std::log(r)) - r * r - lf(n);
  }
  if (!(r * r + 6.0 * r < basis.n_max())) {
    const int suggested = static_cast<int>(std::ceil(r * r + 6.0 * r)) + 1;
    throw TruncationError("state " + label + ": |zeta|^2 + 6|zeta| = " +
                              std::to_string(r * r + 6.0 * r) + " not below n_max = " +
                              std::to_string(basis.n_max()),
                          std::max(suggested, suggest_n_max(log_p)));
  }
  ComplexVector c = ComplexVector::Zero(basis.dim());
  const double theta = std::arg(zeta);
  for (int n = 0; n < basis.dim(); ++n) c(n) = std::polar(std::exp(0.5 * log_p[n]), n * theta);
  StateVector s(basis, std::move(c), StateKind::Canonical, zeta, label);
  check_built(s, log_p);
  return s;
}

StateVector fock_state(int n, const TruncatedBasis& basis) {
  if (n < 0 || n > basis.n_max()) throw RangeError("fock_state: index outside basis");
  ComplexVector c = ComplexVector::Zero(basis.dim());
  c(n) = 1.0;
  return StateVector(basis, std::move(c), StateKind::Fock, static_cast<double>(n),
                     "fock(" + std::to_string(n) + ")");
}

double nlcs_normalization_constant(std::complex<double> alpha, int terms) {
  const double r = std::abs(alpha);
  if (r == 0.0) return std::sqrt(12.0);
  std::vector<double> log_t(terms);
  for (int n = 0; n < terms; ++n) log_t[n] = specfun::log_term_nlcs(n, std::log(r));
  return std::exp(-0.5 * specfun::log_sum_exp(log_t));
}

Verdict classify_series(const std::vector<double>& log_terms) {
  constexpr int kWindow = 5;
  constexpr double kNonSummable = 0.25;
  const int count = static_cast<int>(log_terms.size());
  if (count < kWindow + 2) return Verdict::Converges;
  std::vector<double> ratio(count - 1);
  for (int i = 0; i + 1 < count; ++i) ratio[i] = log_terms[i + 1] - log_terms[i];
  const int last = count - 2;
  bool increasing = true;
  bool positive = true;
  bool non_summable = true;
  for (int i = last - kWindow + 1; i <= last; ++i) {
    positive = positive && ratio[i] > 0.0;
    const double step = ratio[i] - ratio[i - 1];
    increasing = increasing && step > 0.0;
    non_summable = non_summable && (i + 1) * step >= kNonSummable;
  }
  if (increasing && (positive || non_summable)) return Verdict::Diverges;
  return Verdict::Converges;
}

DivergenceReport dual_series_diagnose(std::complex<double> alpha, int n_terms) {
  if (n_terms < 10) throw DomainError("dual_series_diagnose: need at least 10 terms");
  const double r = std::abs(alpha);
  DivergenceReport report{r, {}, {}, Verdict::Converges};
  const auto& lf = specfun::log_factorial_table();
  const double log6 = std::log(6.0);
  const double log2 = std::log(2.0);
  auto log_term = [&](int n) {
    const double power = n == 0 ? 0.0 : n * std::log(r);
    return power + 0.5 * (lf(n + 3) - log6) + 0.5 * (lf(n + 2) + lf(n) - log2) - lf(n);
  };
  if (r == 0.0) {
    report.term_log_magnitudes.push_back(log_term(0));
    return report;
  }
  for (int n = 0; n < n_terms; ++n) report.term_log_magnitudes.push_back(log_term(n));
  for (int n = 0; n + 1 < n_terms; ++n) {
    report.ratio_trend.push_back(report.term_log_magnitudes[n + 1] - report.term_log_magnitudes[n]);
  }
  report.verdict = classify_series(report.term_log_magnitudes);
  return report;
}

std::complex<double> overlap(const StateVector& a, const StateVector& b) {
  require_same_basis(a.basis(), b.basis(), "overlap");
  return a.amplitudes().dot(b.amplitudes());
}

std::string verdict_name(Verdict v) { return v == Verdict::Diverges ? "diverges" : "converges"; }

}  // namespace isonlcs::states
