#pragma once

#include <array>
#include <string_view>

#include "isonlcs/basis.hpp"

namespace isonlcs::fockspace {

struct DeformationValue {
  double value;
  bool degenerate;  // true only at n = 2, where the radicand is negative
};

// f(n) = sqrt((n-1)(n-3)).
DeformationValue deformation_f(int n);

// Diagonal of F = (N0 - 2) / (N- N+) on physical level n >= 3.
double rescale_factor(int n);

// h(n) = (5/2) n (n+1) - n (n+1) (n + 1/2).
double casimir_h(int n);

struct LadderPair {
  OperatorMatrix lower;
  OperatorMatrix raise;
};

struct LadderTriple {
  OperatorMatrix lower;
  OperatorMatrix raise;
  OperatorMatrix number;
};

// (N-, N+, N0): N-|n> = sqrt(n) f(n) |n-1>, N+|n> = sqrt(n+1) f(n+1) |n+1>.
LadderTriple deformed_ladders(const TruncatedBasis& basis);

// (a, a+) with a = f(N0+1)^{-1} N-, a+ = f(N0)^{-1} N+.
LadderPair undeformed_ladders(const TruncatedBasis& basis);

enum class RescaleCase { I, II, III };

// Case I:   (N-, N+ F, N1 = (N+ F) N-)
// Case II:  (F N-, N+, N2 = N+ (F N-))
// Case III: (K-, K+, K0 = K+ K-) with K- = sqrt(F) N-, K+ = N+ sqrt(F)
LadderTriple rescaled_ladders(const TruncatedBasis& basis, RescaleCase which);

enum class AlgebraIdentity { Quad, CasimirLeft, CasimirRight, HeisI, HeisII, HeisIII, NumIII };

inline constexpr std::array<AlgebraIdentity, 7> kAllIdentities = {
    AlgebraIdentity::Quad,  AlgebraIdentity::CasimirLeft, AlgebraIdentity::CasimirRight,
    AlgebraIdentity::HeisI, AlgebraIdentity::HeisII,      AlgebraIdentity::HeisIII,
    AlgebraIdentity::NumIII};

std::string_view identity_name(AlgebraIdentity which);

// Columns n~ < n_max - 4 are interior; the last levels of any truncated ladder
// algebra break the commutation relations.
int interior_column_count(const TruncatedBasis& basis);

// Max |entry| of (lhs - rhs) of the selected identity over interior columns.
// Evaluated in extended precision: N- N+ reaches ~n^3 = 8e6 at n_max = 200,
// where one double ulp already exceeds 1e-10.
double algebra_residual(const TruncatedBasis& basis, AlgebraIdentity which);

struct CasimirReport {
  double ordering_gap;  // max |(N- N+ + h(N0)) - (N+ N- + h(N0 - 1))|
  double value;         // max |N- N+ + h(N0)|, the common value
};

CasimirReport casimir_report(const TruncatedBasis& basis);

}  // namespace isonlcs::fockspace
