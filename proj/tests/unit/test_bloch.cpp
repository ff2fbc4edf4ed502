#include <gtest/gtest.h>

#include <sstream>

#include "qsdiag/bloch.hpp"
#include "qsdiag/channels.hpp"
#include "qsdiag/error.hpp"
#include "support/testing.hpp"

using namespace qsd;
using namespace qsd::testing;

namespace {

const std::vector<ChannelKind> kKinds = {
    ChannelKind::rotation_x,       ChannelKind::rotation_y,       ChannelKind::rotation_z,
    ChannelKind::bit_flip,         ChannelKind::bit_phase_flip,   ChannelKind::phase_flip,
    ChannelKind::amp_damp_z_minus, ChannelKind::amp_damp_z_plus,  ChannelKind::amp_damp_x_minus,
    ChannelKind::amp_damp_x_plus,  ChannelKind::amp_damp_y_minus, ChannelKind::amp_damp_y_plus,
    ChannelKind::depolarizing_standard};

std::vector<Eigen::MatrixXcd> eigen_ops(const KrausChannel& ch) {
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& f : ch.operators()) out.push_back(to_eigen(f));
  return out;
}

double orth_defect(const Eigen::Matrix3d& o) {
  return (o * o.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(BlochVectorTest, Examples) {
  const auto up = bloch_from_dm(dm_from_pure(PureState::basis(1, 0)));
  EXPECT_EQ(up.vec(), Eigen::Vector3d(0, 0, 1));
  const auto mixed =
      bloch_from_dm(DensityMatrix::from_matrix(ComplexMatrix::identity(2) * 0.5));
  EXPECT_EQ(mixed.vec(), Eigen::Vector3d(0, 0, 0));
  const auto plus =
      bloch_from_dm(DensityMatrix::from_matrix(ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}})));
  EXPECT_EQ(plus.vec(), Eigen::Vector3d(1, 0, 0));
}

TEST(BlochVectorTest, InverseExamples) {
  EXPECT_EQ(dm_from_bloch({0, 0, 1}).matrix(), ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}));
  EXPECT_EQ(dm_from_bloch({0, 0, 0}).matrix(), ComplexMatrix::identity(2) * 0.5);
  EXPECT_EQ(dm_from_bloch({1, 0, 0}).matrix(), ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}));
}

TEST(BlochVectorTest, MatchesPauliExpectationAndRoundTrips) {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = random_density(1, rng);
    const auto v = bloch_from_dm(rho);
    EXPECT_LT((v.vec() - bloch_oracle(to_eigen(rho.matrix()))).norm(), 1e-15);
    EXPECT_LT(max_abs_diff(dm_from_bloch(v).matrix(), rho.matrix()), 1e-14);
    EXPECT_LE(v.norm(), 1.0 + 1e-10);
  }
}

TEST(BlochVectorTest, Errors) {
  EXPECT_THROW(dm_from_bloch({1.0, 1.0, 0.0}), DomainError);
  Rng rng(62);
  EXPECT_THROW(bloch_from_dm(random_density(2, rng)), DimensionError);
}

TEST(AffineMap, IdentityChannel) {
  const auto map = affine_map_of_channel(KrausChannel({ComplexMatrix::identity(2)}));
  EXPECT_EQ(map.m, Eigen::Matrix3d::Identity());
  EXPECT_EQ(map.c, Eigen::Vector3d::Zero());
}

TEST(AffineMap, AmplitudeDampingClosedForm) {
  for (double theta : {0.0, 0.5, kPi / 4, 2.0, kPi}) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const auto map = affine_map_of_channel(make_amp_damp(Axis::z, Direction::plus, theta));
    const Eigen::Matrix3d expected = Eigen::Vector3d(c, c, c * c).asDiagonal();
    EXPECT_LT((map.m - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((map.c - Eigen::Vector3d(0, 0, s * s)).norm(), 1e-12);
  }
}

TEST(AffineMap, MatchesPauliTransferOracle) {
  for (auto kind : kKinds)
    for (double theta : {0.1, 0.9, 1.6, 2.4, 3.0}) {
      const auto ch = make_channel({kind, theta, std::nullopt});
      const auto map = affine_map_of_channel(ch);
      const auto [m, c] = pauli_transfer(eigen_ops(ch));
      EXPECT_LT((map.m - m).cwiseAbs().maxCoeff(), 1e-12) << ch.name();
      EXPECT_LT((map.c - c).cwiseAbs().maxCoeff(), 1e-12) << ch.name();
    }
}

TEST(AffineMap, ExactOnRandomStates) {
  Rng rng(63);
  for (auto kind : kKinds)
    for (int k = 0; k < 10; ++k) {
      const auto ch = make_channel({kind, kPi * k / 9.0, std::nullopt});
      const auto map = affine_map_of_channel(ch);
      double worst = 0.0;
      for (int trial = 0; trial < 100; ++trial) {
        const auto rho = random_density(1, rng);
        const auto direct = bloch_from_dm(apply_channel(ch, rho)).vec();
        worst = std::max(worst, (direct - map(bloch_from_dm(rho)).vec()).cwiseAbs().maxCoeff());
      }
      EXPECT_LT(worst, 1e-10) << ch.name();
    }
}

TEST(AffineMap, ImageStaysInsideBall) {
  for (auto kind : kKinds)
    for (int k = 0; k < 10; ++k) {
      const auto map = affine_map_of_channel(make_channel({kind, kPi * k / 9.0, std::nullopt}));
      for (const auto& p : ellipsoid_samples(map, 13, 24)) EXPECT_LE(p.norm(), 1.0 + 1e-10);
      EXPECT_LE(map.m.jacobiSvd().singularValues()(0), 1.0 + 1e-8);
      EXPECT_LE(map.c.norm(), 1.0 + 1e-8);
    }
}

TEST(Decompose, Identity) {
  const auto d = decompose_map({});
  EXPECT_LT((d.d - Eigen::Vector3d::Ones()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(orth_defect(d.o1), 1e-15);
  EXPECT_LT((d.reconstruct() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Decompose, PhaseFlipReordersAxes) {
  const double theta = 1.0;
  const auto map = affine_map_of_channel(make_deformation(Deformation::phase_flip, theta));
  const auto d = decompose_map(map);
  EXPECT_NEAR(d.d(0), 1.0, 1e-12);
  EXPECT_NEAR(d.d(1), std::cos(theta), 1e-12);
  EXPECT_NEAR(d.d(2), std::cos(theta), 1e-12);
  // the unit direction is z in both frames
  EXPECT_NEAR(std::abs(d.o1(2, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(d.o2(2, 0)), 1.0, 1e-12);
  EXPECT_LT((d.reconstruct() - map.m).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Decompose, RotationHasUnitSingularValues) {
  for (auto axis : {Axis::x, Axis::y, Axis::z}) {
    const auto d = decompose_map(affine_map_of_channel(make_rotation(axis, 0.77)));
    EXPECT_LT((d.d.cwiseAbs() - Eigen::Vector3d::Ones()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Decompose, RandomChannelsReconstruct) {
  Rng rng(64);
  for (auto kind : kKinds)
    for (double theta : {0.3, 1.4, 2.7}) {
      const auto d = decompose_map(affine_map_of_channel(make_channel({kind, theta, std::nullopt})));
      EXPECT_LT(orth_defect(d.o1), 1e-10);
      EXPECT_LT(orth_defect(d.o2), 1e-10);
      EXPECT_GT(d.o1.determinant(), 0.0);
      EXPECT_GT(d.o2.determinant(), 0.0);
      for (int i = 0; i + 1 < 3; ++i) EXPECT_GE(std::abs(d.d(i)) + 1e-15, std::abs(d.d(i + 1)));
    }
  // a reflection forces a negative entry into D
  BlochAffineMap reflect;
  reflect.m = Eigen::Vector3d(1, 1, -1).asDiagonal();
  const auto d = decompose_map(reflect);
  EXPECT_LT(d.d(2), 0.0);
  EXPECT_LT((d.reconstruct() - reflect.m).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Ellipsoid, IdentityIsUnitSphereGrid) {
  const auto pts = ellipsoid_samples({}, 5, 8);
  ASSERT_EQ(pts.size(), 40u);
  for (const auto& p : pts) EXPECT_NEAR(p.norm(), 1.0, 1e-15);
  // latitude-major: first row is the north pole, last row the south pole
  for (std::size_t j = 0; j < 8; ++j) {
    EXPECT_NEAR(pts[j].z, 1.0, 1e-15);
    EXPECT_NEAR(pts[32 + j].z, -1.0, 1e-15);
  }
  // equator, azimuth π/2
  EXPECT_NEAR(pts[2 * 8 + 2].y, 1.0, 1e-15);
}

TEST(Ellipsoid, DepolarizingCollapsesToOrigin) {
  const auto map = affine_map_of_channel(make_depolarizing_standard(kPi / 3));
  for (const auto& p : ellipsoid_samples(map, 7, 12)) EXPECT_LT(p.norm(), 1e-12);
}

TEST(Ellipsoid, PhaseFlipCollapsesToZAxis) {
  const auto map = affine_map_of_channel(make_deformation(Deformation::phase_flip, kPi / 2));
  for (const auto& p : ellipsoid_samples(map, 7, 12)) {
    EXPECT_LT(std::hypot(p.x, p.y), 1e-12);
    EXPECT_LE(std::abs(p.z), 1.0 + 1e-15);
  }
}

TEST(Ellipsoid, CsvContract) {
  const std::vector<BlochVector> pts = {{0.1, -0.0, 1.0 / 3.0}, {1, 2, 3}};
  const auto csv = points_to_csv(pts);
  EXPECT_EQ(csv, "x,y,z\n0.10000000000000001,0,0.33333333333333331\n1,2,3\n");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  EXPECT_EQ(std::stod(line.substr(line.rfind(',') + 1)), 1.0 / 3.0);
  EXPECT_THROW(ellipsoid_samples({}, 1, 5), InputError);
}
