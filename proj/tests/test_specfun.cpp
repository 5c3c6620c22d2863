#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "isonlcs/errors.hpp"
#include "isonlcs/specfun.hpp"
#include "oracles.hpp"

using namespace isonlcs;

TEST_CASE("log factorial table matches lgamma") {
  for (int n : {0, 1, 2, 5, 20, 170, 500, 1024}) {
    CHECK(specfun::log_factorial(n) == doctest::Approx(std::lgamma(n + 1.0)).epsilon(1e-13));
  }
  CHECK(specfun::log_factorial(0) == 0.0);
  CHECK_THROWS_AS(specfun::log_factorial(1025), RangeError);
  CHECK_THROWS_AS(specfun::log_factorial(-1), RangeError);
}

TEST_CASE("hermite polynomials agree with std::hermite") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-4.0, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 25;
    const double x = ux(rng);
    const double ref = std::hermite(n, x);
    CHECK(specfun::hermite(n, x) == doctest::Approx(ref).epsilon(1e-12).scale(1.0));
  }
  CHECK(specfun::hermite(3, 1.0) == -4.0);
  CHECK(specfun::hermite(4, 0.0) == 12.0);
  CHECK_THROWS_AS(specfun::hermite(specfun::kHermiteMaxOrder + 1, 0.5), RangeError);
}

TEST_CASE("hermite functions are the normalized polynomials") {
  for (double x : {-3.0, -0.4, 0.0, 1.3, 5.0}) {
    const auto h = specfun::hermite_functions(30, x);
    REQUIRE(h.size() == 31);
    for (int n = 0; n <= 30; ++n) CHECK(h[n] == doctest::Approx(oracle::hermite_function(n, x)).epsilon(1e-11).scale(1e-14));
  }
  // Large orders stay finite where H_n alone would overflow.
  const auto big = specfun::hermite_functions(400, 20.0);
  for (double v : big) CHECK(std::isfinite(v));
}

TEST_CASE("associated laguerre agrees with std::assoc_laguerre") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0.0, 30.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = trial % 40;
    const int k = (trial / 7) % 30;
    const double x = ux(rng);
    const double ref = std::assoc_laguerre(n, k, x);
    CHECK(specfun::assoc_laguerre(n, k, x) ==
          doctest::Approx(ref).epsilon(1e-10).scale(1e-10 * std::max(1.0, std::abs(ref))));
  }
  CHECK(specfun::assoc_laguerre(0, 5, 2.0) == 1.0);
  CHECK(specfun::assoc_laguerre(1, 0, 2.0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(specfun::assoc_laguerre(-1, 0, 1.0), DomainError);
}

TEST_CASE("negative laguerre order is allowed while n + k >= 0") {
  // L_n^{-n}(x) = (-x)^n / n!
  CHECK(specfun::assoc_laguerre(3, -3, 2.0) == doctest::Approx(-8.0 / 6.0));
  CHECK_THROWS_AS(specfun::assoc_laguerre(2, -3, 1.0), DomainError);
}

TEST_CASE("nlcs log term") {
  CHECK(specfun::log_term_nlcs(0, std::log(2.0)) == doctest::Approx(-std::log(12.0)));
  CHECK(specfun::log_term_nlcs(0, -std::numeric_limits<double>::infinity()) ==
        doctest::Approx(-std::log(12.0)));
  const double lr = std::log(1.7);
  CHECK(specfun::log_term_nlcs(5, lr) ==
        doctest::Approx(10 * lr - oracle::lfact(5) - oracle::lfact(7) - oracle::lfact(8)));
}

TEST_CASE("log-sum-exp") {
  const std::vector<double> v = {std::log(1.0), std::log(2.0), std::log(3.0)};
  CHECK(specfun::log_sum_exp(v) == doctest::Approx(std::log(6.0)));
  const std::vector<double> big = {1000.0, 1000.0};
  CHECK(specfun::log_sum_exp(big) == doctest::Approx(1000.0 + std::log(2.0)));
  const double ninf = -std::numeric_limits<double>::infinity();
  const std::vector<double> with_inf = {ninf, 0.0};
  CHECK(specfun::log_sum_exp(with_inf) == doctest::Approx(0.0));
  const std::vector<double> all_inf = {ninf, ninf};
  CHECK(specfun::log_sum_exp(all_inf) == ninf);
}
