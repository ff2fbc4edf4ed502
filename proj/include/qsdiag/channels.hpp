#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qsdiag/kraus.hpp"

namespace qsd {

enum class Axis { x, y, z };
enum class Direction { plus, minus };
enum class Deformation { bit_flip, bit_phase_flip, phase_flip };

enum class ChannelKind {
  identity,
  rotation_x,
  rotation_y,
  rotation_z,
  bit_flip,
  bit_phase_flip,
  phase_flip,
  amp_damp_z_minus,
  amp_damp_z_plus,
  amp_damp_x_minus,
  amp_damp_x_plus,
  amp_damp_y_minus,
  amp_damp_y_plus,
  depolarizing_general,
  depolarizing_standard,
};

/// Factory request. theta is the error intensity in radians; env_amplitudes
/// is only used by depolarizing_general.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::identity;
  double theta = 0.0;
  std::optional<std::array<cplx, 4>> env_amplitudes;
};

std::string_view kind_name(ChannelKind kind);
/// Throws InputError for unknown names.
ChannelKind kind_from_name(std::string_view name);

/// Parses "kind:theta[:alpha,beta,gamma,delta]", e.g. "phase_flip:pi/3" or
/// "depolarizing_general:0:0.5,0.5,0.5,0.5". depolarizing_general also
/// accepts "depolarizing_general:alpha,beta,gamma,delta". Numbers go through
/// parse_scalar. Throws ParseError / InputError.
ChannelSpec parse_channel_spec(std::string_view text);
std::string format_channel_spec(const ChannelSpec& spec);

/// Builds the channel. Throws InputError for theta outside [0, π] on the
/// kinds that require it, NormalizationError for bad env amplitudes.
KrausChannel make_channel(const ChannelSpec& spec);

/// Unitary rotation error. x and z use R_x(θ), R_z(θ); the y channel is
/// defined by its Bloch action X' = cos θ X − sin θ Z, Z' = sin θ X + cos θ Z,
/// which is realized by R_y(−θ).
KrausChannel make_rotation(Axis axis, double theta);

/// {|cos θ/2| I, |sin θ/2| σ_a} with σ_a = σx, σy, σz; θ ∈ [0, π].
KrausChannel make_deformation(Deformation kind, double theta);

/// Amplitude damping toward the `direction` pole of `axis`; θ ∈ [0, π].
/// z/plus is {diag(1, cos θ/2), sin θ/2 |0><1|}, z/minus its reversal
/// {diag(cos θ/2, 1), sin θ/2 |1><0|}. The x and y variants are U† F U for
/// U = (1/√2)[[1, ±1], [∓1, 1]] and (1/√2)[[1, ±i], [±i, 1]].
KrausChannel make_amp_damp(Axis axis, Direction direction, double theta);

/// {|α| I, |β| σx, |γ| σy, |δ| σz}; phases of the environment amplitudes do
/// not change the channel action. Zero-weight operators are pruned.
KrausChannel make_depolarizing_general(const std::array<cplx, 4>& env_amplitudes);

/// {cos θ I, sin θ/√3 σx, sin θ/√3 σy, sin θ/√3 σz}; θ ∈ [0, π].
KrausChannel make_depolarizing_standard(double theta);

/// The rotation U used to carry z-axis damping onto `axis`/`direction`
/// (identity for z).
ComplexMatrix damping_frame(Axis axis, Direction direction);

}  // namespace qsd
