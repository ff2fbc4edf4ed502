#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsdiag/kraus.hpp"

namespace qsd {

/// Bloch coordinates of a single-qubit state, ρ = ½ [[1+Z, X−iY], [X+iY, 1−Z]].
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Eigen::Vector3d vec() const { return {x, y, z}; }
  static BlochVector from(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }
  double norm() const { return vec().norm(); }
};

/// λ' = M λ + c.
struct BlochAffineMap {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  Eigen::Vector3d c = Eigen::Vector3d::Zero();

  BlochVector operator()(const BlochVector& v) const { return BlochVector::from(m * v.vec() + c); }
};

/// M = O1 · D · O2ᵀ with O1, O2 orthogonal and D diagonal.
struct MapDecomposition {
  Eigen::Matrix3d o1;
  Eigen::Vector3d d;  ///< diagonal of D, sorted by descending |d_i|
  Eigen::Matrix3d o2;

  Eigen::Matrix3d reconstruct() const { return o1 * d.asDiagonal() * o2.transpose(); }
};

/// Throws DimensionError unless rho is a single qubit.
BlochVector bloch_from_dm(const DensityMatrix& rho);

/// Throws DomainError if ‖v‖ > 1 + 1e-10.
DensityMatrix dm_from_bloch(const BlochVector& v);

/// Probes the channel on I/2 and on (I + σ_j)/2: c = bloch(E(I/2)),
/// column j of M = bloch(E((I + σ_j)/2)) − c.
/// Throws DimensionError unless the channel acts on one qubit.
BlochAffineMap affine_map_of_channel(const KrausChannel& ch);

/// Real SVD-type split. O1 and O2 are made proper rotations where possible,
/// absorbing a reflection into the sign of the smallest entry of D.
MapDecomposition decompose_map(const BlochAffineMap& map);

/// Image under `map` of a latitude/longitude grid on the unit sphere: polar
/// angle π·i/(n_lat−1) for i = 0..n_lat−1 (poles included, duplicates kept),
/// azimuth 2π·j/n_lon for j = 0..n_lon−1. Latitude-major order.
/// Throws InputError if n_lat < 2 or n_lon < 2.
std::vector<BlochVector> ellipsoid_samples(const BlochAffineMap& map, std::size_t n_lat,
                                           std::size_t n_lon);

/// "x,y,z" header then one point per line with 17 significant digits.
std::string points_to_csv(const std::vector<BlochVector>& points);

}  // namespace qsd
