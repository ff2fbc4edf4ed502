#pragma once

#include <span>
#include <vector>

#include "qsdiag/core.hpp"

namespace qsd {

/// Sorted set of distinct qubit positions in an n-qubit register (0 = LSB).
class QubitSubset {
 public:
  /// Sorts the indices; throws InputError on duplicates or indices >= n.
  static QubitSubset of(int n_qubits, std::vector<int> indices);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(int q) const;
  /// Qubits of the register that are not in this subset.
  QubitSubset complement() const;

 private:
  QubitSubset(int n, std::vector<int> idx) : n_qubits_(n), indices_(std::move(idx)) {}

  int n_qubits_ = 0;
  std::vector<int> indices_;
};

/// Kronecker product a ⊗ b, with `a` as the more significant factor.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr_traced{ρ}. The kept qubits keep their relative order.
/// Throws InputError if `traced` is empty, covers the whole register, or was
/// built for a different register size.
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& traced);

/// Relabels qubits: qubit q of the input becomes qubit permutation[q] of the
/// output. Throws InputError unless `permutation` is a bijection on 0..n-1.
DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const int> permutation);

/// Unitary P with P|b> = |b'> for the relabeling used by permute_qubits.
ComplexMatrix permutation_unitary(int n_qubits, std::span<const int> permutation);

/// Embeds a 2^k x 2^k gate into an n-qubit register. targets[0] is the
/// gate's most significant qubit, so for a controlled gate the control is
/// listed first. Throws DimensionError if the gate size does not match.
ComplexMatrix immerse_gate(const ComplexMatrix& gate, std::span<const int> targets, int n_qubits);

}  // namespace qsd
