#include <gtest/gtest.h>

#include "qsdiag/bloch.hpp"
#include "qsdiag/channels.hpp"
#include "qsdiag/error.hpp"
#include "qsdiag/gates.hpp"
#include "support/testing.hpp"

using namespace qsd;
using namespace qsd::testing;
using namespace std::complex_literals;

namespace {

const std::vector<ChannelKind> kThetaKinds = {
    ChannelKind::rotation_x,       ChannelKind::rotation_y,       ChannelKind::rotation_z,
    ChannelKind::bit_flip,         ChannelKind::bit_phase_flip,   ChannelKind::phase_flip,
    ChannelKind::amp_damp_z_minus, ChannelKind::amp_damp_z_plus,  ChannelKind::amp_damp_x_minus,
    ChannelKind::amp_damp_x_plus,  ChannelKind::amp_damp_y_minus, ChannelKind::amp_damp_y_plus,
    ChannelKind::depolarizing_standard};

KrausChannel make(ChannelKind k, double theta) { return make_channel({k, theta, std::nullopt}); }

std::vector<ComplexMatrix> pauli_basis() {
  return {ComplexMatrix::identity(2), gates::pauli_x(), gates::pauli_y(), gates::pauli_z()};
}

void expect_ops(const KrausChannel& ch, const std::vector<ComplexMatrix>& expected, double tol) {
  ASSERT_EQ(ch.size(), expected.size()) << ch.name();
  for (std::size_t i = 0; i < expected.size(); ++i)
    EXPECT_LE(max_abs_diff(ch.operators()[i], expected[i]), tol) << ch.name() << " op " << i;
}

}  // namespace

TEST(Rotation, ZeroAngleIsIdentity) {
  expect_ops(make_rotation(Axis::z, 0.0), {ComplexMatrix::identity(2)}, 1e-16);
}

TEST(Rotation, RxPiIsMinusISigmaX) {
  expect_ops(make_rotation(Axis::x, kPi), {gates::pauli_x() * cplx(0.0, -1.0)}, 1e-15);
}

TEST(Rotation, RyQuarterTurnBlochAction) {
  // printed transform at θ = π/2: (X, Y, Z) -> (-Z, Y, X)
  const auto map = affine_map_of_channel(make_rotation(Axis::y, kPi / 2));
  Eigen::Matrix3d expected;
  expected << 0, 0, -1, 0, 1, 0, 1, 0, 0;
  EXPECT_LT((map.m - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(map.c.norm(), 1e-15);
}

TEST(Rotation, PreservesBlochNorm) {
  Rng rng(51);
  for (auto axis : {Axis::x, Axis::y, Axis::z})
    for (int trial = 0; trial < 20; ++trial) {
      const double theta = 2 * kPi * std::uniform_real_distribution<double>()(rng);
      const auto ch = make_rotation(axis, theta);
      const auto rho = random_density(1, rng);
      EXPECT_NEAR(bloch_from_dm(apply_channel(ch, rho)).norm(), bloch_from_dm(rho).norm(), 1e-12);
    }
}

TEST(Deformation, ZeroIntensityIsIdentity) {
  expect_ops(make_deformation(Deformation::bit_flip, 0.0), {ComplexMatrix::identity(2)}, 0.0);
}

TEST(Deformation, OperatorForm) {
  for (double theta : {0.5, 1.5, 3.0}) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    expect_ops(make_deformation(Deformation::bit_flip, theta),
               {ComplexMatrix::identity(2) * c, gates::pauli_x() * s}, 1e-16);
    expect_ops(make_deformation(Deformation::bit_phase_flip, theta),
               {ComplexMatrix::identity(2) * c, gates::pauli_y() * s}, 1e-16);
    expect_ops(make_deformation(Deformation::phase_flip, theta),
               {ComplexMatrix::identity(2) * c, gates::pauli_z() * s}, 1e-16);
  }
}

TEST(Deformation, PhaseFlipBlochMap) {
  for (double theta : {0.3, 1.2, 2.9}) {
    const auto map = affine_map_of_channel(make_deformation(Deformation::phase_flip, theta));
    const Eigen::Matrix3d expected =
        Eigen::Vector3d(std::cos(theta), std::cos(theta), 1.0).asDiagonal();
    EXPECT_LT((map.m - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(map.c.norm(), 1e-12);
  }
}

TEST(Deformation, BitPhaseFlipHalfPiOnGroundState) {
  const auto ch = make_deformation(Deformation::bit_phase_flip, kPi / 2);
  const auto rho = dm_from_pure(PureState::basis(1, 0));
  // ½ρ + ½ σy ρ σy, with σy|0><0|σy = |1><1|
  const auto y = gates::pauli_y();
  const auto oracle = rho.matrix() * 0.5 + y * rho.matrix() * y * 0.5;
  EXPECT_LT(max_abs_diff(apply_channel(ch, rho).matrix(), oracle), 1e-15);
  EXPECT_LT(max_abs_diff(oracle, ComplexMatrix::identity(2) * 0.5), 1e-15);
}

TEST(Deformation, MatchesControlledPauliCircuit) {
  const std::pair<Deformation, ComplexMatrix> cases[] = {
      {Deformation::bit_flip, gates::pauli_x()},
      {Deformation::bit_phase_flip, gates::pauli_y()},
      {Deformation::phase_flip, gates::pauli_z()}};
  for (const auto& [kind, sigma] : cases)
    for (double theta : {0.1, 1.0, 2.0, 3.1}) {
      const auto env = PureState::from_amplitudes({std::cos(theta / 2), std::sin(theta / 2)});
      const auto ch = kraus_from_unitary(gates::controlled(sigma), env);
      expect_ops(ch, make_deformation(kind, theta).operators(), 1e-12);
    }
}

TEST(Deformation, RejectsOutOfRange) {
  EXPECT_THROW(make_deformation(Deformation::bit_flip, -0.1), InputError);
  EXPECT_THROW(make_deformation(Deformation::phase_flip, 3.2), InputError);
  EXPECT_THROW(make_amp_damp(Axis::x, Direction::plus, 4.0), InputError);
  EXPECT_THROW(make_depolarizing_standard(-1.0), InputError);
  EXPECT_NO_THROW(make_deformation(Deformation::phase_flip, kPi));
}

TEST(AmpDamp, ZeroIntensityIsIdentity) {
  for (auto axis : {Axis::x, Axis::y, Axis::z})
    for (auto dir : {Direction::plus, Direction::minus})
      expect_ops(make_amp_damp(axis, dir, 0.0), {ComplexMatrix::identity(2)}, 1e-15);
}

TEST(AmpDamp, ZOperators) {
  const double theta = 1.1, c = std::cos(theta / 2), s = std::sin(theta / 2);
  expect_ops(make_amp_damp(Axis::z, Direction::plus, theta),
             {ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, c}}),
              ComplexMatrix::from_rows({{0.0, s}, {0.0, 0.0}})},
             0.0);
  expect_ops(make_amp_damp(Axis::z, Direction::minus, theta),
             {ComplexMatrix::from_rows({{c, 0.0}, {0.0, 1.0}}),
              ComplexMatrix::from_rows({{0.0, 0.0}, {s, 0.0}})},
             0.0);
}

TEST(AmpDamp, FullDampingSendsEverythingToGround) {
  Rng rng(52);
  const auto ch = make_amp_damp(Axis::z, Direction::plus, kPi);
  const auto ground = dm_from_pure(PureState::basis(1, 0)).matrix();
  for (int trial = 0; trial < 20; ++trial)
    EXPECT_LT(max_abs_diff(apply_channel(ch, random_density(1, rng)).matrix(), ground), 1e-15);
}

TEST(AmpDamp, PrintedRotatedOperators) {
  for (double theta : {0.4, 1.7, 2.8}) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    // sign = +1 selects the upper printed signs
    auto x_ops = [&](double sign) {
      return std::vector<ComplexMatrix>{
          ComplexMatrix::from_rows({{1 + c, sign * (1 - c)}, {sign * (1 - c), 1 + c}}) * 0.5,
          ComplexMatrix::from_rows({{-sign * s, s}, {-s, sign * s}}) * 0.5};
    };
    auto y_ops = [&](double sign) {
      return std::vector<ComplexMatrix>{
          ComplexMatrix::from_rows(
              {{1 + c, sign * 1i * (1 - c)}, {-sign * 1i * (1 - c), 1 + c}}) * 0.5,
          ComplexMatrix::from_rows({{sign * 1i * s, s}, {s, -sign * 1i * s}}) * 0.5};
    };
    expect_ops(make_amp_damp(Axis::x, Direction::plus, theta), x_ops(+1), 1e-15);
    expect_ops(make_amp_damp(Axis::x, Direction::minus, theta), x_ops(-1), 1e-15);
    expect_ops(make_amp_damp(Axis::y, Direction::minus, theta), y_ops(+1), 1e-15);
    expect_ops(make_amp_damp(Axis::y, Direction::plus, theta), y_ops(-1), 1e-15);
  }
}

TEST(AmpDamp, FixedPoints) {
  const double h = 1.0 / std::sqrt(2.0);
  const std::tuple<Axis, Direction, std::vector<cplx>> cases[] = {
      {Axis::z, Direction::plus, {1.0, 0.0}}, {Axis::z, Direction::minus, {0.0, 1.0}},
      {Axis::x, Direction::plus, {h, h}},     {Axis::x, Direction::minus, {h, -h}},
      {Axis::y, Direction::plus, {h, 1i * h}}, {Axis::y, Direction::minus, {h, -1i * h}}};
  const double theta = kPi / 4;
  const double c2 = std::pow(std::cos(theta / 2), 2);
  for (const auto& [axis, dir, pole] : cases) {
    const auto ch = make_amp_damp(axis, dir, theta);
    const auto target = dm_from_pure(PureState::from_amplitudes(pole)).matrix();
    // From I/2 the weight off the pole decays as ½ cos²ⁿ(θ/2), so the distance
    // after n steps is known exactly.
    auto rho = DensityMatrix::from_matrix(ComplexMatrix::identity(2) * 0.5);
    for (int n = 1; n <= 300; ++n) {
      rho = apply_channel(ch, rho);
      if (n == 50 || n == 300) {
        const double off_pole =
            std::real(rho.matrix().trace() - (target * rho.matrix()).trace());
        EXPECT_NEAR(off_pole, 0.5 * std::pow(c2, n), 1e-13) << ch.name() << " n=" << n;
      }
    }
    EXPECT_LT(max_abs_diff(rho.matrix(), target), 1e-8) << ch.name();
  }
}

TEST(Depolarizing, GeneralSpecialCases) {
  expect_ops(make_depolarizing_general({1.0, 0.0, 0.0, 0.0}), {ComplexMatrix::identity(2)}, 0.0);
  Rng rng(53);
  const auto bit = make_depolarizing_general({0.0, 1.0, 0.0, 0.0});
  const auto x = gates::pauli_x();
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = random_density(1, rng);
    EXPECT_LT(max_abs_diff(apply_channel(bit, rho).matrix(), x * rho.matrix() * x), 1e-15);
  }
}

TEST(Depolarizing, FullTwirl) {
  Rng rng(54);
  const auto ch = make_depolarizing_general({0.5, 0.5, 0.5, 0.5});
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = random_density(1, rng);
    ComplexMatrix oracle(2, 2);
    for (const auto& p : pauli_basis()) oracle += p * rho.matrix() * p * 0.25;
    const auto out = apply_channel(ch, rho).matrix();
    EXPECT_LT(max_abs_diff(out, oracle), 1e-15);
    EXPECT_LT(max_abs_diff(out, ComplexMatrix::identity(2) * 0.5), 1e-15);
  }
}

TEST(Depolarizing, PhasesOfEnvironmentIgnored) {
  const auto a = make_depolarizing_general({0.5, 0.5, 0.5, 0.5});
  const auto b = make_depolarizing_general({0.5, 0.5i, -0.5, std::polar(0.5, 1.0)});
  expect_ops(b, a.operators(), 1e-16);
}

TEST(Depolarizing, GeneralMatchesTwoQubitEnvironmentCircuit) {
  // Environment qubits (MSBs) select the Pauli: U = Σ_k |k><k| ⊗ σ_k.
  Rng rng(55);
  ComplexMatrix u(8, 8);
  const auto paulis = pauli_basis();
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) u(2 * k + r, 2 * k + c) = paulis[k](r, c);
  for (int trial = 0; trial < 10; ++trial) {
    const auto env = random_pure(2, rng);
    const std::array<cplx, 4> amps{env[0], env[1], env[2], env[3]};
    const auto direct = make_depolarizing_general(amps);
    const auto extracted = kraus_from_unitary(u, env);
    const auto rho = random_density(1, rng);
    EXPECT_LT(max_abs_diff(apply_channel(direct, rho).matrix(),
                           apply_channel(extracted, rho).matrix()),
              1e-12);
  }
}

TEST(Depolarizing, NonNormalizedRejected) {
  EXPECT_THROW(make_depolarizing_general({1.0, 1.0, 0.0, 0.0}), NormalizationError);
}

TEST(Depolarizing, StandardZeroIsIdentity) {
  expect_ops(make_depolarizing_standard(0.0), {ComplexMatrix::identity(2)}, 0.0);
}

TEST(Depolarizing, StandardHalfPiShrink) {
  const auto map = affine_map_of_channel(make_depolarizing_standard(kPi / 2));
  EXPECT_LT((map.m - Eigen::Matrix3d::Identity() * (-1.0 / 3.0)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Depolarizing, StandardThirdPiIsFullyMixing) {
  const auto ch = make_depolarizing_standard(kPi / 3);
  for (const auto& p : pauli_basis()) {
    const auto rho_j = (ComplexMatrix::identity(2) + p) * 0.5;
    if (p == ComplexMatrix::identity(2)) continue;
    EXPECT_LT(max_abs_diff(apply_kraus_sum(ch, rho_j), ComplexMatrix::identity(2) * 0.5), 1e-15);
  }
}

TEST(Factory, CompletenessOverDomain) {
  for (auto kind : kThetaKinds)
    for (int k = 0; k < 20; ++k) {
      const double theta = kPi * k / 19.0;
      EXPECT_LT(validate_channel(make(kind, theta)), 1e-12) << kind_name(kind) << " " << theta;
    }
  Rng rng(56);
  for (int k = 0; k < 20; ++k) {
    const auto env = random_pure(2, rng);
    EXPECT_LT(validate_channel(make_depolarizing_general({env[0], env[1], env[2], env[3]})),
              1e-12);
  }
}

TEST(ChannelSpecText, ParseAndFormat) {
  const auto s = parse_channel_spec("amp_damp_x_plus:pi/4");
  EXPECT_EQ(s.kind, ChannelKind::amp_damp_x_plus);
  EXPECT_DOUBLE_EQ(s.theta, kPi / 4);
  const auto back = parse_channel_spec(format_channel_spec(s));
  EXPECT_EQ(back.kind, s.kind);
  EXPECT_EQ(back.theta, s.theta);

  const auto d = parse_channel_spec("depolarizing_general:0.5,0.5i,-0.5,0.5");
  ASSERT_TRUE(d.env_amplitudes.has_value());
  EXPECT_EQ((*d.env_amplitudes)[1], cplx(0.0, 0.5));
  const auto d2 = parse_channel_spec(format_channel_spec(d));
  EXPECT_EQ(*d2.env_amplitudes, *d.env_amplitudes);

  EXPECT_EQ(parse_channel_spec("identity").kind, ChannelKind::identity);
  EXPECT_EQ(parse_channel_spec(" phase_flip : 3.14159 ").kind, ChannelKind::phase_flip);
}

TEST(ChannelSpecText, Errors) {
  EXPECT_THROW(parse_channel_spec("warp_drive:1"), InputError);
  EXPECT_THROW(parse_channel_spec("bit_flip"), ParseError);
  EXPECT_THROW(parse_channel_spec("bit_flip:abc"), ParseError);
  EXPECT_THROW(parse_channel_spec("depolarizing_general:1,0"), ParseError);
  EXPECT_THROW(make_channel({ChannelKind::depolarizing_general, 0.0, std::nullopt}), InputError);
}

TEST(ChannelSpecText, KindNamesRoundTrip) {
  for (auto kind : kThetaKinds) EXPECT_EQ(kind_from_name(kind_name(kind)), kind);
}
