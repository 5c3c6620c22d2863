#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace isonlcs {

// Shifted Fock basis |n~> := |n + 3>, n~ = 0..n_max, spanning the invariant
// subspace above the isolated ground state |0>. The isolated level is only a
// flag; no operator in this library acts on it.
class TruncatedBasis {
 public:
  static constexpr int kOffset = 3;
  static constexpr int kMinNMax = 8;

  explicit TruncatedBasis(int n_max, bool includes_isolated_ground = false);

  int n_max() const noexcept { return n_max_; }
  int dim() const noexcept { return n_max_ + 1; }
  int offset() const noexcept { return kOffset; }
  bool includes_isolated_ground() const noexcept { return includes_isolated_ground_; }

  int physical_level(int shifted) const noexcept { return shifted + kOffset; }
  int shifted_index(int physical) const noexcept { return physical - kOffset; }
  bool contains_level(int physical) const noexcept {
    return physical >= kOffset && physical <= n_max_ + kOffset;
  }

  friend bool operator==(const TruncatedBasis&, const TruncatedBasis&) = default;

 private:
  int n_max_;
  bool includes_isolated_ground_;
};

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Dense operator on a TruncatedBasis. Entry (row, col) is <row|O|col>, so an
// annihilator has its non-zeros on the first super-diagonal.
class OperatorMatrix {
 public:
  OperatorMatrix(TruncatedBasis basis, ComplexMatrix entries, std::string label);

  const TruncatedBasis& basis() const noexcept { return basis_; }
  const ComplexMatrix& entries() const noexcept { return entries_; }
  const std::string& label() const noexcept { return label_; }
  int dim() const noexcept { return basis_.dim(); }

  std::complex<double> operator()(int row, int col) const { return entries_(row, col); }

  // <to|O|from> addressed by physical levels; zero when either level lies
  // outside the basis (e.g. |2>).
  std::complex<double> element(int to_level, int from_level) const;

  OperatorMatrix adjoint() const;
  OperatorMatrix power(int k) const;
  OperatorMatrix relabeled(std::string label) const;

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(std::complex<double> c, const OperatorMatrix& a);

 private:
  TruncatedBasis basis_;
  ComplexMatrix entries_;
  std::string label_;
};

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix identity_operator(const TruncatedBasis& basis);

// Throws UsageError when the two bases differ.
void require_same_basis(const TruncatedBasis& a, const TruncatedBasis& b, const char* where);

}  // namespace isonlcs
