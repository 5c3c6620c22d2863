#include "isonlcs/basis.hpp"

#include <string>
#include <utility>

#include "isonlcs/errors.hpp"

namespace isonlcs {

TruncatedBasis::TruncatedBasis(int n_max, bool includes_isolated_ground)
    : n_max_(n_max), includes_isolated_ground_(includes_isolated_ground) {
  if (n_max < kMinNMax) {
    throw DomainError("TruncatedBasis: n_max = " + std::to_string(n_max) +
                      " below minimum " + std::to_string(kMinNMax));
  }
}

void require_same_basis(const TruncatedBasis& a, const TruncatedBasis& b, const char* where) {
  if (!(a == b)) {
    throw UsageError(std::string(where) + ": basis mismatch (n_max " +
                     std::to_string(a.n_max()) + " vs " + std::to_string(b.n_max()) + ")");
  }
}

OperatorMatrix::OperatorMatrix(TruncatedBasis basis, ComplexMatrix entries, std::string label)
    : basis_(basis), entries_(std::move(entries)), label_(std::move(label)) {
  if (entries_.rows() != basis_.dim() || entries_.cols() != basis_.dim()) {
    throw UsageError("OperatorMatrix '" + label_ + "': entries are not dim x dim");
  }
  if (!entries_.allFinite()) {
    throw InvariantError("OperatorMatrix '" + label_ + "': non-finite entry");
  }
}

std::complex<double> OperatorMatrix::element(int to_level, int from_level) const {
  if (!basis_.contains_level(to_level) || !basis_.contains_level(from_level)) return 0.0;
  return entries_(basis_.shifted_index(to_level), basis_.shifted_index(from_level));
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return OperatorMatrix(basis_, entries_.adjoint(), label_ + "^dag");
}

OperatorMatrix OperatorMatrix::power(int k) const {
  if (k < 0) throw DomainError("OperatorMatrix::power: negative exponent");
  ComplexMatrix acc = ComplexMatrix::Identity(dim(), dim());
  for (int i = 0; i < k; ++i) acc = entries_ * acc;
  return OperatorMatrix(basis_, std::move(acc), label_ + "^" + std::to_string(k));
}

OperatorMatrix OperatorMatrix::relabeled(std::string label) const {
  return OperatorMatrix(basis_, entries_, std::move(label));
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a.basis_, b.basis_, "OperatorMatrix product");
  return OperatorMatrix(a.basis_, a.entries_ * b.entries_, a.label_ + " " + b.label_);
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a.basis_, b.basis_, "OperatorMatrix sum");
  return OperatorMatrix(a.basis_, a.entries_ + b.entries_, a.label_ + " + " + b.label_);
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a.basis_, b.basis_, "OperatorMatrix difference");
  return OperatorMatrix(a.basis_, a.entries_ - b.entries_, a.label_ + " - " + b.label_);
}

OperatorMatrix operator*(std::complex<double> c, const OperatorMatrix& a) {
  return OperatorMatrix(a.basis_, c * a.entries_, a.label_);
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return (a * b - b * a).relabeled("[" + a.label() + ", " + b.label() + "]");
}

OperatorMatrix identity_operator(const TruncatedBasis& basis) {
  return OperatorMatrix(basis, ComplexMatrix::Identity(basis.dim(), basis.dim()), "I");
}

}  // namespace isonlcs
