#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qsdiag/core.hpp"

namespace qsd::testing {

inline constexpr double kPi = 3.14159265358979323846;

using Rng = std::mt19937_64;

inline cplx gaussian_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  return {re, g(rng)};
}

inline ComplexMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = gaussian_complex(rng);
  return m;
}

// G G† / tr with G of shape d x rank: random state of rank <= rank.
inline DensityMatrix random_density(int n_qubits, Rng& rng, std::size_t rank = 0) {
  const std::size_t d = std::size_t{1} << n_qubits;
  if (rank == 0) rank = d;
  const ComplexMatrix g = random_matrix(d, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  const cplx tr = rho.trace();
  rho *= 1.0 / tr.real();
  for (std::size_t i = 0; i < d; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < d; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return DensityMatrix::from_matrix(rho);
}

inline PureState random_pure(int n_qubits, Rng& rng) {
  const std::size_t d = std::size_t{1} << n_qubits;
  std::vector<cplx> a(d);
  double norm2 = 0.0;
  for (auto& z : a) {
    z = gaussian_complex(rng);
    norm2 += std::norm(z);
  }
  for (auto& z : a) z /= std::sqrt(norm2);
  return PureState::from_amplitudes(std::move(a));
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

// Haar-ish random unitary via Householder QR of a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(to_eigen(random_matrix(d, d, rng)));
  return from_eigen(qr.householderQ() * Eigen::MatrixXcd::Identity(d, d));
}

// Textbook Kronecker product, written independently of qsd::tensor.
inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Tr over the most significant qubit of a 2d x 2d matrix: sum of diagonal blocks.
inline Eigen::MatrixXcd trace_msb(const Eigen::MatrixXcd& m) {
  const Eigen::Index d = m.rows() / 2;
  return m.block(0, 0, d, d) + m.block(d, d, d, d);
}

// Tr over the least significant qubit.
inline Eigen::MatrixXcd trace_lsb(const Eigen::MatrixXcd& m) {
  const Eigen::Index d = m.rows() / 2;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  return out;
}

inline double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_diff(const ComplexMatrix& a, const Eigen::MatrixXcd& b) {
  return max_diff(to_eigen(a), b);
}

inline const Eigen::Matrix2cd& pauli(int k) {
  using namespace std::complex_literals;
  static const Eigen::Matrix2cd s[4] = {
      (Eigen::Matrix2cd() << 1, 0, 0, 1).finished(),
      (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),
      (Eigen::Matrix2cd() << 0, -1i, 1i, 0).finished(),
      (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(),
  };
  return s[k];
}

// Bloch vector as Tr(ρσ_k), an expression independent of the library's
// entry-wise formula.
inline Eigen::Vector3d bloch_oracle(const Eigen::MatrixXcd& rho) {
  Eigen::Vector3d v;
  for (int k = 1; k <= 3; ++k) v(k - 1) = (rho * pauli(k)).trace().real();
  return v;
}

// Pauli transfer matrix of ρ -> Σ F ρ F†: R_ij = ½ Tr(σ_i Φ(σ_j)), i, j = 0..3.
// Returns M = R[1:,1:] and c = R[1:,0].
inline std::pair<Eigen::Matrix3d, Eigen::Vector3d> pauli_transfer(
    const std::vector<Eigen::MatrixXcd>& ops) {
  Eigen::Matrix4d r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
      for (const auto& f : ops) out += f * pauli(j) * f.adjoint();
      r(i, j) = 0.5 * (pauli(i) * out).trace().real();
    }
  return {r.block<3, 3>(1, 1), r.block<3, 1>(1, 0)};
}

}  // namespace qsd::testing
