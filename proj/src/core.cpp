#include "qsdiag/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsdiag/error.hpp"

namespace qsd {

namespace {

int register_size(std::size_t dim, const char* what) {
  const int n = log2_exact(dim);
  if (n < 1 || n > kMaxQubits) {
    throw DimensionError(std::string(what) + " dimension " + std::to_string(dim) +
                         " is not 2^n with 1 <= n <= " + std::to_string(kMaxQubits));
  }
  return n;
}

double off_diagonal_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

}  // namespace

PureState PureState::from_amplitudes(std::vector<cplx> amplitudes, double tol) {
  const int n = register_size(amplitudes.size(), "state vector");
  double norm2 = 0.0;
  for (const auto& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw InputError("state vector has non-finite amplitudes");
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > tol) {
    throw NormalizationError("state vector is not normalized: sum |a|^2 = " +
                             std::to_string(norm2));
  }
  return PureState(n, std::move(amplitudes));
}

PureState PureState::basis(int n_qubits, std::size_t index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw DimensionError("register size " + std::to_string(n_qubits) + " out of range");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim)
    throw InputError("basis index " + std::to_string(index) + " out of range for " +
                     std::to_string(n_qubits) + " qubits");
  std::vector<cplx> a(dim, cplx{});
  a[index] = 1.0;
  return PureState(n_qubits, std::move(a));
}

std::vector<EigenPair> hermitian_eigen(const ComplexMatrix& h) {
  if (!h.is_square()) throw DimensionError("eigendecomposition needs a square matrix");
  const std::size_t n = h.rows();
  // Work on the Hermitian part so tiny asymmetries do not stall convergence.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  ComplexMatrix w = ComplexMatrix::identity(n);

  double total = 0.0;
  for (const auto& z : a.data()) total += std::norm(z);
  const double threshold = std::max(total, 1e-300) * 1e-30;

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm2(a) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase q so the pivot is real, then apply a real Jacobi rotation.
        const cplx phase = std::conj(apq) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // V restricted to (p, q): [[c, s], [-s*phase, c*phase]].
        const cplx vpp = c, vpq = s, vqp = -s * phase, vqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx wkp = w(k, p), wkq = w(k, q);
          w(k, p) = wkp * vpp + wkq * vqp;
          w(k, q) = wkp * vpq + wkq * vqq;
        }
      }
    }
  }

  std::vector<EigenPair> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j].value = a(j, j).real();
    out[j].vector.resize(n);
    for (std::size_t k = 0; k < n; ++k) out[j].vector[k] = w(k, j);
    for (std::size_t k = 0; k < n; ++k) {
      const double mag = std::abs(out[j].vector[k]);
      if (mag > 1e-12) {
        const cplx fix = std::conj(out[j].vector[k]) / mag;
        for (auto& z : out[j].vector) z *= fix;
        out[j].vector[k] = mag;
        break;
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const EigenPair& x, const EigenPair& y) { return x.value > y.value; });
  return out;
}

DensityReport validate_density(const ComplexMatrix& matrix, double tol) {
  if (!matrix.is_square() || matrix.empty())
    throw DimensionError("density matrix must be square and non-empty");
  DensityReport r;
  r.hermiticity_defect = hermiticity_defect(matrix);
  r.trace_defect = std::abs(matrix.trace() - cplx{1.0, 0.0});
  const auto eig = hermitian_eigen(matrix);
  r.min_eigenvalue = eig.back().value;
  r.passed = matrix.all_finite() && r.hermiticity_defect <= tol && r.trace_defect <= tol &&
             r.min_eigenvalue >= -tol;
  return r;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, Tolerances tol) {
  if (!m.is_square()) throw DimensionError("density matrix must be square");
  const int n = register_size(m.rows(), "density matrix");
  if (!m.all_finite()) throw InputError("density matrix has non-finite entries");
  const double herm = hermiticity_defect(m);
  if (herm > tol.algebraic)
    throw DomainError("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  const double tr = std::abs(m.trace() - cplx{1.0, 0.0});
  if (tr > tol.algebraic)
    throw DomainError("density matrix trace differs from 1 by " + std::to_string(tr));
  const double lmin = hermitian_eigen(m).back().value;
  if (lmin < -tol.spectral)
    throw DomainError("density matrix has negative eigenvalue " + std::to_string(lmin));
  return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) {
  if (!m.is_square()) throw DimensionError("density matrix must be square");
  const int n = register_size(m.rows(), "density matrix");
  return DensityMatrix(n, std::move(m));
}

DensityMatrix dm_from_pure(const PureState& state) {
  const std::size_t d = state.dim();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = state[i] * std::conj(state[j]);
  return DensityMatrix::unchecked(std::move(m));
}

std::vector<SpectralTerm> spectral_decompose(const DensityMatrix& rho) {
  auto pairs = hermitian_eigen(rho.matrix());
  std::vector<SpectralTerm> out;
  out.reserve(pairs.size());
  for (auto& p : pairs) {
    // Jacobi rotations keep the columns orthonormal to rounding error.
    out.push_back({p.value, PureState::from_amplitudes(std::move(p.vector), 1e-9)});
  }
  return out;
}

ComplexMatrix reconstruct(const std::vector<SpectralTerm>& terms) {
  if (terms.empty()) return {};
  const std::size_t d = terms.front().eigenvector.dim();
  ComplexMatrix m(d, d);
  for (const auto& t : terms)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        m(i, j) += t.eigenvalue * t.eigenvector[i] * std::conj(t.eigenvector[j]);
  return m;
}

}  // namespace qsd
