#include <doctest.h>

#include <cmath>

#include "isonlcs/errors.hpp"
#include "isonlcs/fockspace.hpp"

using namespace isonlcs;
using namespace isonlcs::fockspace;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("basis invariants") {
  const TruncatedBasis b(20);
  CHECK(b.dim() == 21);
  CHECK(b.offset() == 3);
  CHECK(b.physical_level(0) == 3);
  CHECK(b.shifted_index(10) == 7);
  CHECK(b.contains_level(3));
  CHECK_FALSE(b.contains_level(2));
  CHECK_FALSE(b.contains_level(24));
  CHECK_THROWS_AS(TruncatedBasis(7), DomainError);
}

TEST_CASE("operator matrices reject mismatched bases") {
  const auto a = deformed_ladders(TruncatedBasis(10));
  const auto b = deformed_ladders(TruncatedBasis(12));
  CHECK_THROWS_AS(a.lower * b.raise, UsageError);
  CHECK_THROWS_AS(commutator(a.lower, b.lower), UsageError);
  ComplexMatrix bad = ComplexMatrix::Zero(11, 11);
  bad(0, 0) = std::nan("");
  CHECK_THROWS(OperatorMatrix(TruncatedBasis(10), bad, "bad"));
  CHECK_THROWS(OperatorMatrix(TruncatedBasis(10), ComplexMatrix::Zero(5, 5), "small"));
}

TEST_CASE("deformation f") {
  CHECK(deformation_f(3).value == 0.0);
  CHECK(deformation_f(1).value == 0.0);
  CHECK(deformation_f(4).value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(deformation_f(2).degenerate);
  CHECK(deformation_f(2).value == 0.0);
  CHECK_FALSE(deformation_f(5).degenerate);
  CHECK_THROWS_AS(deformation_f(-1), DomainError);
}

TEST_CASE("deformed ladder entries") {
  const TruncatedBasis b(30);
  const auto l = deformed_ladders(b);
  CHECK(l.lower.element(3, 4).real() == doctest::Approx(2.0 * std::sqrt(3.0)));
  CHECK(l.lower.element(2, 3) == std::complex<double>(0.0));
  CHECK(l.number.element(5, 5).real() == 5.0);
  // N+ is the conjugate transpose of N-, bitwise.
  CHECK(max_abs(l.raise.entries() - l.lower.entries().adjoint()) == 0.0);
  // Band structure: lower only on the first super-diagonal.
  for (int i = 0; i < b.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) {
      if (j != i + 1) CHECK(l.lower(i, j) == std::complex<double>(0.0));
      if (i != j + 1) CHECK(l.raise(i, j) == std::complex<double>(0.0));
      if (i != j) CHECK(l.number(i, j) == std::complex<double>(0.0));
    }
  }
}

TEST_CASE("deformed ladders follow the matrix-element formula") {
  const TruncatedBasis b(40);
  const auto l = deformed_ladders(b);
  for (int n = 4; n <= 43; ++n) {
    const double f = std::sqrt((n - 1.0) * (n - 3.0));
    CHECK(l.lower.element(n - 1, n).real() == doctest::Approx(std::sqrt(double(n)) * f).epsilon(1e-14));
  }
  for (int n = 3; n < 43; ++n) {
    const double f1 = std::sqrt(double(n) * (n - 2.0));
    CHECK(l.raise.element(n + 1, n).real() == doctest::Approx(std::sqrt(n + 1.0) * f1).epsilon(1e-14));
  }
}

TEST_CASE("undeformed ladders") {
  const TruncatedBasis b(20);
  const auto u = undeformed_ladders(b);
  CHECK(u.raise.element(4, 3).real() == doctest::Approx(2.0));
  CHECK(u.lower.element(2, 3) == std::complex<double>(0.0));
  CHECK(u.lower.element(4, 5).real() == doctest::Approx(std::sqrt(5.0)));
  for (int n = 4; n < 22; ++n) {
    CHECK(u.lower.element(n - 1, n).real() == doctest::Approx(std::sqrt(double(n))));
    CHECK(u.raise.element(n + 1, n).real() == doctest::Approx(std::sqrt(n + 1.0)));
  }
}

TEST_CASE("rescaled ladders") {
  const TruncatedBasis b(30);
  const auto k = rescaled_ladders(b, RescaleCase::III);
  CHECK(k.lower.element(3, 4).real() == doctest::Approx(1.0));
  CHECK(k.raise.element(4, 3).real() == doctest::Approx(1.0));
  const auto c1 = rescaled_ladders(b, RescaleCase::I);
  CHECK(c1.raise.element(4, 3).real() == doctest::Approx(std::sqrt(3.0) / 6.0).epsilon(1e-14));
  // [N-, N+ F] |3> = |3>
  const auto comm = commutator(c1.lower, c1.raise);
  CHECK(comm(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
  const auto c2 = rescaled_ladders(b, RescaleCase::II);
  CHECK(max_abs(c2.raise.entries() - deformed_ladders(b).raise.entries()) == 0.0);
  // K+ is the conjugate transpose of K-.
  CHECK(max_abs(k.raise.entries() - k.lower.entries().adjoint()) == 0.0);
}

TEST_CASE("K0 spectrum is the shifted number operator") {
  const TruncatedBasis b(60);
  const auto k = rescaled_ladders(b, RescaleCase::III);
  for (int i = 0; i < interior_column_count(b); ++i) {
    CHECK(k.number(i, i).real() == doctest::Approx(double(i)).epsilon(1e-13).scale(1e-13));
  }
}

TEST_CASE("F-diagonal identity F(n) * (N- N+)_nn = n - 2") {
  const TruncatedBasis b(200);
  const auto l = deformed_ladders(b);
  const ComplexMatrix nn = l.lower.entries() * l.raise.entries();
  for (int i = 0; i < interior_column_count(b); ++i) {
    const int n = b.physical_level(i);
    CHECK(std::abs(rescale_factor(n) * nn(i, i).real() - (n - 2.0)) < 1e-12 * n);
    CHECK(rescale_factor(n) == doctest::Approx(1.0 / (n * (n + 1.0))).epsilon(1e-15));
  }
}

TEST_CASE("casimir h") {
  CHECK(casimir_h(0) == 0.0);
  CHECK(casimir_h(3) == doctest::Approx(-12.0));
  CHECK(casimir_h(4) == doctest::Approx(-40.0));
}

TEST_CASE("algebra residuals vanish on interior columns") {
  for (int n_max : {16, 50, 200}) {
    const TruncatedBasis b(n_max);
    for (auto id : kAllIdentities) {
      INFO(identity_name(id), " n_max=", n_max);
      CHECK(algebra_residual(b, id) < 1e-10);
    }
  }
  CHECK(algebra_residual(TruncatedBasis(200), AlgebraIdentity::HeisIII) < 1e-12);
}

TEST_CASE("quadratic algebra on column |3>") {
  const TruncatedBasis b(20);
  const auto l = deformed_ladders(b);
  const auto c = commutator(l.raise, l.lower);
  CHECK(c(0, 0).real() == doctest::Approx(-12.0));
}

TEST_CASE("algebra identities break at the truncation edge") {
  // The edge exclusion is needed: the full matrix commutator fails in the last column.
  const TruncatedBasis b(20);
  const auto k = rescaled_ladders(b, RescaleCase::III);
  const ComplexMatrix c = commutator(k.lower, k.raise).entries() - identity_operator(b).entries();
  CHECK(std::abs(c(b.dim() - 1, b.dim() - 1)) > 1.0);
}

TEST_CASE("casimir orderings agree and vanish") {
  const auto rep = casimir_report(TruncatedBasis(200));
  CHECK(rep.ordering_gap < 1e-10);
  CHECK(rep.value < 1e-10);
}

TEST_CASE("identity names") {
  CHECK(identity_name(AlgebraIdentity::Quad) == "QUAD");
  CHECK(identity_name(AlgebraIdentity::CasimirLeft) == "CASIMIR_LEFT");
  CHECK(identity_name(AlgebraIdentity::NumIII) == "NUM_III");
}
