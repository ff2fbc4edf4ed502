#include "qsdiag/bloch.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "qsdiag/error.hpp"
#include "qsdiag/gates.hpp"

namespace qsd {

namespace {

constexpr cplx I{0.0, 1.0};

BlochVector bloch_of(const ComplexMatrix& r) {
  return {2.0 * r(1, 0).real(), 2.0 * r(1, 0).imag(), (r(0, 0) - r(1, 1)).real()};
}

}  // namespace

BlochVector bloch_from_dm(const DensityMatrix& rho) {
  if (rho.n_qubits() != 1)
    throw DimensionError("Bloch vectors are defined for single-qubit states");
  return bloch_of(rho.matrix());
}

DensityMatrix dm_from_bloch(const BlochVector& v) {
  if (!(v.norm() <= 1.0 + 1e-10))
    throw DomainError("Bloch vector norm " + std::to_string(v.norm()) + " exceeds 1");
  ComplexMatrix m = ComplexMatrix::from_rows(
      {{0.5 * (1.0 + v.z), 0.5 * (v.x - I * v.y)}, {0.5 * (v.x + I * v.y), 0.5 * (1.0 - v.z)}});
  return DensityMatrix::unchecked(std::move(m));
}

BlochAffineMap affine_map_of_channel(const KrausChannel& ch) {
  if (ch.dim() != 2) throw DimensionError("affine Bloch maps need a single-qubit channel");
  const ComplexMatrix half_identity = ComplexMatrix::identity(2) * 0.5;
  const ComplexMatrix sigma[3] = {gates::pauli_x(), gates::pauli_y(), gates::pauli_z()};

  BlochAffineMap map;
  map.c = bloch_of(apply_kraus_sum(ch, half_identity)).vec();
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix probe = half_identity + sigma[j] * 0.5;
    map.m.col(j) = bloch_of(apply_kraus_sum(ch, probe)).vec() - map.c;
  }
  return map;
}

MapDecomposition decompose_map(const BlochAffineMap& map) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(map.m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  MapDecomposition out{svd.matrixU(), svd.singularValues(), svd.matrixV()};
  if (out.o1.determinant() < 0) {
    out.o1.col(2) *= -1.0;
    out.d(2) *= -1.0;
  }
  if (out.o2.determinant() < 0) {
    out.o2.col(2) *= -1.0;
    out.d(2) *= -1.0;
  }
  return out;
}

std::vector<BlochVector> ellipsoid_samples(const BlochAffineMap& map, std::size_t n_lat,
                                           std::size_t n_lon) {
  if (n_lat < 2 || n_lon < 2) throw InputError("ellipsoid grid needs at least 2x2 points");
  std::vector<BlochVector> out;
  out.reserve(n_lat * n_lon);
  for (std::size_t i = 0; i < n_lat; ++i) {
    const double polar = std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_lat - 1);
    for (std::size_t j = 0; j < n_lon; ++j) {
      const double az = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_lon);
      const BlochVector p{std::sin(polar) * std::cos(az), std::sin(polar) * std::sin(az),
                          std::cos(polar)};
      out.push_back(map(p));
    }
  }
  return out;
}

std::string points_to_csv(const std::vector<BlochVector>& points) {
  std::string s = "x,y,z\n";
  char buf[96];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.x + 0.0, p.y + 0.0, p.z + 0.0);
    s += buf;
  }
  return s;
}

}  // namespace qsd
