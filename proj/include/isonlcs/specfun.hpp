#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace isonlcs::specfun {

inline constexpr int kLogFactorialTableSize = 1024;
inline constexpr int kHermiteMaxOrder = 400;

// ln(n!) for n = 0..size, accumulated as ln(n!) = ln((n-1)!) + ln(n).
class LogFactorialTable {
 public:
  explicit LogFactorialTable(int size = kLogFactorialTableSize);

  int size() const noexcept { return static_cast<int>(values_.size()) - 1; }
  double operator()(int n) const;
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

// Shared immutable default table.
const LogFactorialTable& log_factorial_table();

// ln(n!); throws RangeError above the default table size.
double log_factorial(int n);

// Physicists' Hermite polynomial H_n(x), n <= kHermiteMaxOrder.
double hermite(int n, double x);

// Orthonormal Hermite functions h_k(x) = e^{-x^2/2} H_k(x) / sqrt(2^k k! sqrt(pi)),
// k = 0..n_max, by the normalized three-term recurrence (no overflow in H_k).
std::vector<double> hermite_functions(int n_max, double x);

// Generalized Laguerre L_n^k(x); requires n >= 0 and n + k >= 0.
double assoc_laguerre(int n, int k, double x);

// ln(r^{2n} / (n! (n+2)! (n+3)!)) with log_r = ln r.
double log_term_nlcs(int n, double log_r);

// ln(sum_i exp(v_i)); -inf entries are allowed.
double log_sum_exp(std::span<const double> v);

}  // namespace isonlcs::specfun
