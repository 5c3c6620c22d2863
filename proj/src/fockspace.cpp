#include "isonlcs/fockspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isonlcs/errors.hpp"

namespace isonlcs::fockspace {

namespace {

template <typename Real>
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

// The builders are written once for any real scalar: double feeds the public
// OperatorMatrix objects, long double feeds the residual checks.
template <typename Real>
struct Ladders {
  RealMatrix<Real> lower;
  RealMatrix<Real> raise;
  RealMatrix<Real> number;
};

template <typename Real>
RealMatrix<Real> number_diagonal(const TruncatedBasis& basis, int shift = 0) {
  RealMatrix<Real> out = RealMatrix<Real>::Zero(basis.dim(), basis.dim());
  for (int i = 0; i < basis.dim(); ++i) out(i, i) = Real(basis.physical_level(i) + shift);
  return out;
}

template <typename Real>
Ladders<Real> deformed(const TruncatedBasis& basis) {
  const int dim = basis.dim();
  Ladders<Real> out{RealMatrix<Real>::Zero(dim, dim), RealMatrix<Real>::Zero(dim, dim),
                    number_diagonal<Real>(basis)};
  // sqrt(n) f(n) = sqrt(n (n-1) (n-3)), taken as a single root of an exact integer.
  for (int col = 1; col < dim; ++col) {
    const long n = basis.physical_level(col);
    out.lower(col - 1, col) = std::sqrt(static_cast<Real>(n * (n - 1) * (n - 3)));
  }
  out.raise = out.lower.transpose();
  return out;
}

template <typename Real>
RealMatrix<Real> rescale_diagonal(const TruncatedBasis& basis, bool square_root) {
  RealMatrix<Real> out = RealMatrix<Real>::Zero(basis.dim(), basis.dim());
  for (int i = 0; i < basis.dim(); ++i) {
    const long n = basis.physical_level(i);
    const Real value = Real(n - 2) / Real((n + 1) * n * (n - 2));
    out(i, i) = square_root ? std::sqrt(value) : value;
  }
  return out;
}

template <typename Real>
Ladders<Real> rescaled(const TruncatedBasis& basis, RescaleCase which) {
  const Ladders<Real> d = deformed<Real>(basis);
  switch (which) {
    case RescaleCase::I: {
      const RealMatrix<Real> f = rescale_diagonal<Real>(basis, false);
      RealMatrix<Real> raise = d.raise * f;
      RealMatrix<Real> number = raise * d.lower;
      return {d.lower, std::move(raise), std::move(number)};
    }
    case RescaleCase::II: {
      const RealMatrix<Real> f = rescale_diagonal<Real>(basis, false);
      RealMatrix<Real> lower = f * d.lower;
      RealMatrix<Real> number = d.raise * lower;
      return {std::move(lower), d.raise, std::move(number)};
    }
    case RescaleCase::III: {
      const RealMatrix<Real> g = rescale_diagonal<Real>(basis, true);
      RealMatrix<Real> lower = g * d.lower;
      RealMatrix<Real> raise = d.raise * g;
      RealMatrix<Real> number = raise * lower;
      return {std::move(lower), std::move(raise), std::move(number)};
    }
  }
  throw DomainError("rescaled_ladders: unknown case");
}

template <typename Real>
RealMatrix<Real> casimir_h_diagonal(const TruncatedBasis& basis, int shift) {
  RealMatrix<Real> out = RealMatrix<Real>::Zero(basis.dim(), basis.dim());
  for (int i = 0; i < basis.dim(); ++i) {
    const Real n = Real(basis.physical_level(i) + shift);
    out(i, i) = Real(2.5) * n * (n + 1) - n * (n + 1) * (n + Real(0.5));
  }
  return out;
}

template <typename Real>
RealMatrix<Real> commute(const RealMatrix<Real>& a, const RealMatrix<Real>& b) {
  return a * b - b * a;
}

template <typename Real>
double interior_max_abs(const TruncatedBasis& basis, const RealMatrix<Real>& m) {
  const int cols = interior_column_count(basis);
  return static_cast<double>(m.leftCols(cols).cwiseAbs().maxCoeff());
}

OperatorMatrix to_operator(const TruncatedBasis& basis, const RealMatrix<double>& m,
                           std::string label) {
  return OperatorMatrix(basis, m.cast<std::complex<double>>(), std::move(label));
}

}  // namespace

DeformationValue deformation_f(int n) {
  if (n < 0) throw DomainError("deformation_f: negative level " + std::to_string(n));
  const long radicand = static_cast<long>(n - 1) * (n - 3);
  if (radicand < 0) return {0.0, true};
  return {std::sqrt(static_cast<double>(radicand)), false};
}

double rescale_factor(int n) {
  if (n < 3) throw DomainError("rescale_factor: defined for physical levels n >= 3");
  const double nd = n;
  return (nd - 2.0) / ((nd + 1.0) * nd * (nd - 2.0));
}

double casimir_h(int n) {
  if (n < 0) throw DomainError("casimir_h: negative level");
  const double nd = n;
  return 2.5 * nd * (nd + 1.0) - nd * (nd + 1.0) * (nd + 0.5);
}

LadderTriple deformed_ladders(const TruncatedBasis& basis) {
  const auto d = deformed<double>(basis);
  return {to_operator(basis, d.lower, "N_minus"), to_operator(basis, d.raise, "N_plus"),
          to_operator(basis, d.number, "N_0")};
}

LadderPair undeformed_ladders(const TruncatedBasis& basis) {
  const auto d = deformed<double>(basis);
  // Inverse deformation factors; where f vanishes the matching N+- column is
  // already zero, so the inverse is taken as zero there.
  const int dim = basis.dim();
  RealMatrix<double> inv_f_next = RealMatrix<double>::Zero(dim, dim);  // 1 / f(N0 + 1)
  RealMatrix<double> inv_f = RealMatrix<double>::Zero(dim, dim);       // 1 / f(N0)
  for (int i = 0; i < dim; ++i) {
    const int n = basis.physical_level(i);
    const double f_next = deformation_f(n + 1).value;
    const double f_here = deformation_f(n).value;
    inv_f_next(i, i) = f_next == 0.0 ? 0.0 : 1.0 / f_next;
    inv_f(i, i) = f_here == 0.0 ? 0.0 : 1.0 / f_here;
  }
  return {to_operator(basis, inv_f_next * d.lower, "a"),
          to_operator(basis, inv_f * d.raise, "a_dag")};
}

LadderTriple rescaled_ladders(const TruncatedBasis& basis, RescaleCase which) {
  const auto r = rescaled<double>(basis, which);
  switch (which) {
    case RescaleCase::I:
      return {to_operator(basis, r.lower, "N_minus"), to_operator(basis, r.raise, "Ncal_plus"),
              to_operator(basis, r.number, "N_1")};
    case RescaleCase::II:
      return {to_operator(basis, r.lower, "Ncal_minus"), to_operator(basis, r.raise, "N_plus"),
              to_operator(basis, r.number, "N_2")};
    case RescaleCase::III:
      return {to_operator(basis, r.lower, "K_minus"), to_operator(basis, r.raise, "K_plus"),
              to_operator(basis, r.number, "K_0")};
  }
  throw DomainError("rescaled_ladders: unknown case");
}

std::string_view identity_name(AlgebraIdentity which) {
  switch (which) {
    case AlgebraIdentity::Quad: return "QUAD";
    case AlgebraIdentity::CasimirLeft: return "CASIMIR_LEFT";
    case AlgebraIdentity::CasimirRight: return "CASIMIR_RIGHT";
    case AlgebraIdentity::HeisI: return "HEIS_I";
    case AlgebraIdentity::HeisII: return "HEIS_II";
    case AlgebraIdentity::HeisIII: return "HEIS_III";
    case AlgebraIdentity::NumIII: return "NUM_III";
  }
  return "UNKNOWN";
}

int interior_column_count(const TruncatedBasis& basis) { return basis.n_max() - 4; }

double algebra_residual(const TruncatedBasis& basis, AlgebraIdentity which) {
  using Real = long double;
  const int dim = basis.dim();
  const RealMatrix<Real> eye = RealMatrix<Real>::Identity(dim, dim);
  switch (which) {
    case AlgebraIdentity::Quad: {
      const auto d = deformed<Real>(basis);
      const RealMatrix<Real> rhs = 5 * d.number - 3 * d.number * d.number;
      return interior_max_abs(basis, RealMatrix<Real>(commute(d.raise, d.lower) - rhs));
    }
    case AlgebraIdentity::CasimirLeft: {
      const auto d = deformed<Real>(basis);
      return interior_max_abs(
          basis, RealMatrix<Real>(d.lower * d.raise + casimir_h_diagonal<Real>(basis, 0)));
    }
    case AlgebraIdentity::CasimirRight: {
      const auto d = deformed<Real>(basis);
      return interior_max_abs(
          basis, RealMatrix<Real>(d.raise * d.lower + casimir_h_diagonal<Real>(basis, -1)));
    }
    case AlgebraIdentity::HeisI: {
      const auto r = rescaled<Real>(basis, RescaleCase::I);
      return interior_max_abs(basis, RealMatrix<Real>(commute(r.lower, r.raise) - eye));
    }
    case AlgebraIdentity::HeisII: {
      const auto r = rescaled<Real>(basis, RescaleCase::II);
      return interior_max_abs(basis, RealMatrix<Real>(commute(r.lower, r.raise) - eye));
    }
    case AlgebraIdentity::HeisIII: {
      const auto r = rescaled<Real>(basis, RescaleCase::III);
      return interior_max_abs(basis, RealMatrix<Real>(commute(r.lower, r.raise) - eye));
    }
    case AlgebraIdentity::NumIII: {
      const auto r = rescaled<Real>(basis, RescaleCase::III);
      const double up = interior_max_abs(basis, RealMatrix<Real>(commute(r.number, r.raise) - r.raise));
      const double down = interior_max_abs(basis, RealMatrix<Real>(commute(r.number, r.lower) + r.lower));
      return std::max(up, down);
    }
  }
  throw DomainError("algebra_residual: unknown identity");
}

CasimirReport casimir_report(const TruncatedBasis& basis) {
  using Real = long double;
  const auto d = deformed<Real>(basis);
  const RealMatrix<Real> left = d.lower * d.raise + casimir_h_diagonal<Real>(basis, 0);
  const RealMatrix<Real> right = d.raise * d.lower + casimir_h_diagonal<Real>(basis, -1);
  return {interior_max_abs(basis, RealMatrix<Real>(left - right)), interior_max_abs(basis, left)};
}

}  // namespace isonlcs::fockspace
