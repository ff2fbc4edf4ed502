#pragma once

#include <string>
#include <vector>

#include "qsdiag/core.hpp"

namespace qsd {

/// Operators with ‖F‖_max below this are dropped from extracted channels.
inline constexpr double kPruneThreshold = 1e-14;

/// A list of Kraus operators {F_i} acting as ρ -> Σ F_i ρ F_i†.
///
/// Completeness (Σ F_i† F_i = I) is not enforced at construction so that
/// defective lists can still be inspected with validate_channel();
/// apply_channel() refuses incomplete channels.
class KrausChannel {
 public:
  /// Throws InputError for an empty list and DimensionError unless all
  /// operators are square with a common power-of-two dimension.
  KrausChannel(std::vector<ComplexMatrix> operators, std::string name = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return operators_.size(); }

 private:
  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> operators_;
  std::string name_;
};

/// ‖Σ F_i† F_i − I‖_max.
double validate_channel(const KrausChannel& ch);

/// ρ' = Σ F_i ρ F_i†. Throws DimensionError on mismatch and
/// IncompleteChannelError if the completeness defect exceeds tol.
DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho, double tol = 1e-10);

/// Same sum without the density-matrix wrapper, for probing channels on
/// arbitrary (e.g. Pauli) operators.
ComplexMatrix apply_kraus_sum(const KrausChannel& ch, const ComplexMatrix& x);

/// Kraus operators of ρ -> Tr_env{U (|e><e| ⊗ ρ) U†} with the environment in
/// the most significant qubits: F_i = (<i|_env ⊗ I) U (|e> ⊗ I).
/// Near-zero operators are pruned. Throws DomainError if U is not unitary
/// within tol and DimensionError if U is not (dim env * d) square.
KrausChannel kraus_from_unitary(const ComplexMatrix& u, const PureState& env_state,
                                double tol = 1e-10);

/// Single-ancilla dilation: a 4x4 unitary whose ancilla-<0| column blocks
/// are F_0 (top) and F_1 (bottom); the remaining columns are completed by
/// Gram-Schmidt over canonical basis vectors in index order. Throws
/// InputError for more than two operators or dim != 2, and
/// IncompleteChannelError for an incomplete channel.
ComplexMatrix dilate_single_ancilla(const KrausChannel& ch, double tol = 1e-10);

/// Copy of the channel without operators below kPruneThreshold. Keeps at
/// least one operator.
KrausChannel prune(const KrausChannel& ch);

}  // namespace qsd
