#include "isonlcs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "isonlcs/errors.hpp"

namespace isonlcs::specfun {

LogFactorialTable::LogFactorialTable(int size) {
  if (size < 1) throw RangeError("LogFactorialTable: size must be positive");
  values_.resize(static_cast<std::size_t>(size) + 1);
  values_[0] = 0.0;
  for (int n = 1; n <= size; ++n) {
    values_[n] = values_[n - 1] + std::log(static_cast<double>(n));
  }
}

double LogFactorialTable::operator()(int n) const {
  if (n < 0 || n > size()) {
    throw RangeError("log_factorial: n = " + std::to_string(n) +
                     " outside table [0, " + std::to_string(size()) + "]");
  }
  return values_[n];
}

const LogFactorialTable& log_factorial_table() {
  static const LogFactorialTable table;
  return table;
}

double log_factorial(int n) { return log_factorial_table()(n); }

double hermite(int n, double x) {
  if (n < 0) throw DomainError("hermite: negative order");
  if (n > kHermiteMaxOrder) {
    throw RangeError("hermite: order " + std::to_string(n) + " above cap " +
                     std::to_string(kHermiteMaxOrder));
  }
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * x;
  for (int k = 2; k <= n; ++k) {
    const double next = 2.0 * x * curr - 2.0 * (k - 1) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

std::vector<double> hermite_functions(int n_max, double x) {
  if (n_max < 0) throw DomainError("hermite_functions: negative order");
  std::vector<double> h(static_cast<std::size_t>(n_max) + 1);
  h[0] = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  if (n_max >= 1) h[1] = std::sqrt(2.0) * x * h[0];
  for (int k = 1; k < n_max; ++k) {
    h[k + 1] = std::sqrt(2.0 / (k + 1)) * x * h[k] -
               std::sqrt(static_cast<double>(k) / (k + 1)) * h[k - 1];
  }
  return h;
}

double assoc_laguerre(int n, int k, double x) {
  if (n < 0 || n + k < 0) {
    throw DomainError("assoc_laguerre: requires n >= 0 and n + k >= 0 (n = " +
                      std::to_string(n) + ", k = " + std::to_string(k) + ")");
  }
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 + k - x) * curr - (j + k) * prev) / (j + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double log_term_nlcs(int n, double log_r) {
  const auto& lf = log_factorial_table();
  const double power = n == 0 ? 0.0 : 2.0 * n * log_r;
  return power - lf(n) - lf(n + 2) - lf(n + 3);
}

double log_sum_exp(std::span<const double> v) {
  if (v.empty()) return -std::numeric_limits<double>::infinity();
  const double top = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(top)) return top;
  double acc = 0.0;
  for (double e : v) acc += std::exp(e - top);
  return top + std::log(acc);
}

}  // namespace isonlcs::specfun
