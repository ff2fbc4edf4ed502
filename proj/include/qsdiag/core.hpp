#pragma once

#include <cstddef>
#include <vector>

#include "qsdiag/matrix.hpp"

namespace qsd {

/// Largest register handled anywhere in the library (1024 basis states).
inline constexpr int kMaxQubits = 10;

/// Normalized state vector of an n-qubit register. Basis index bit q is
/// qubit q, so qubit 0 is the least significant.
class PureState {
 public:
  /// Throws DimensionError unless the length is 2^n with 1 <= n <= kMaxQubits,
  /// NormalizationError if |sum |a_i|^2 - 1| > tol.
  static PureState from_amplitudes(std::vector<cplx> amplitudes, double tol = 1e-12);
  /// Computational basis state |index>.
  static PureState basis(int n_qubits, std::size_t index);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  const std::vector<cplx>& amplitudes() const noexcept { return amplitudes_; }
  cplx operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  PureState(int n, std::vector<cplx> a) : n_qubits_(n), amplitudes_(std::move(a)) {}

  int n_qubits_ = 0;
  std::vector<cplx> amplitudes_;
};

struct DensityReport {
  double hermiticity_defect = 0.0;  ///< ‖ρ - ρ†‖_max
  double trace_defect = 0.0;        ///< |tr ρ - 1|
  double min_eigenvalue = 0.0;      ///< of the Hermitian part
  bool passed = false;
};

/// Reports the three defects of a candidate density matrix; passes iff the
/// Hermiticity and trace defects are <= tol and min eigenvalue >= -tol.
/// Throws DimensionError for non-square input.
DensityReport validate_density(const ComplexMatrix& matrix, double tol);

/// Hermitian, unit-trace, positive semidefinite matrix on 1..kMaxQubits qubits.
class DensityMatrix {
 public:
  /// Validates with tol.algebraic for Hermiticity/trace and tol.spectral for
  /// the eigenvalue floor. Throws DimensionError or DomainError.
  static DensityMatrix from_matrix(ComplexMatrix m, Tolerances tol = {});
  /// Skips validation; only the shape is checked. For results of operations
  /// that provably preserve validity.
  static DensityMatrix unchecked(ComplexMatrix m);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  cplx operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

 private:
  DensityMatrix(int n, ComplexMatrix m) : n_qubits_(n), matrix_(std::move(m)) {}

  int n_qubits_ = 0;
  ComplexMatrix matrix_;
};

/// |ψ><ψ|.
DensityMatrix dm_from_pure(const PureState& state);

struct EigenPair {
  double value;
  std::vector<cplx> vector;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Eigenvalues descending; each eigenvector's first component with modulus
/// above 1e-12 is rotated to be real and positive.
std::vector<EigenPair> hermitian_eigen(const ComplexMatrix& h);

struct SpectralTerm {
  double eigenvalue;
  PureState eigenvector;
};

/// ρ = Σ λ_i |i><i| with λ sorted descending.
std::vector<SpectralTerm> spectral_decompose(const DensityMatrix& rho);

/// Σ λ_i |i><i|.
ComplexMatrix reconstruct(const std::vector<SpectralTerm>& terms);

}  // namespace qsd
