#include "qsdiag/channels.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "qsdiag/error.hpp"
#include "qsdiag/gates.hpp"
#include "qsdiag/scalar_expr.hpp"

namespace qsd {

namespace {

constexpr cplx I{0.0, 1.0};

struct KindEntry {
  ChannelKind kind;
  std::string_view name;
};

constexpr std::array<KindEntry, 15> kKinds{{
    {ChannelKind::identity, "identity"},
    {ChannelKind::rotation_x, "rotation_x"},
    {ChannelKind::rotation_y, "rotation_y"},
    {ChannelKind::rotation_z, "rotation_z"},
    {ChannelKind::bit_flip, "bit_flip"},
    {ChannelKind::bit_phase_flip, "bit_phase_flip"},
    {ChannelKind::phase_flip, "phase_flip"},
    {ChannelKind::amp_damp_z_minus, "amp_damp_z_minus"},
    {ChannelKind::amp_damp_z_plus, "amp_damp_z_plus"},
    {ChannelKind::amp_damp_x_minus, "amp_damp_x_minus"},
    {ChannelKind::amp_damp_x_plus, "amp_damp_x_plus"},
    {ChannelKind::amp_damp_y_minus, "amp_damp_y_minus"},
    {ChannelKind::amp_damp_y_plus, "amp_damp_y_plus"},
    {ChannelKind::depolarizing_general, "depolarizing_general"},
    {ChannelKind::depolarizing_standard, "depolarizing_standard"},
}};

void check_intensity(double theta, std::string_view what) {
  constexpr double slack = 1e-12;
  if (!(theta >= -slack && theta <= std::numbers::pi + slack))
    throw InputError(std::string(what) + ": theta = " + std::to_string(theta) +
                     " outside [0, pi]");
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
  return buf;
}

std::string fmt_complex(cplx z) {
  if (z.imag() == 0.0) return fmt17(z.real());
  std::string s = fmt17(z.real());
  if (z.imag() >= 0) s += '+';
  return s + fmt17(z.imag()) + "i";
}

std::string theta_label(std::string_view kind, double theta) {
  return std::string(kind) + "(" + fmt17(theta) + ")";
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string_view::npos ? s.npos : p - start));
    if (p == std::string_view::npos) return out;
    start = p + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::array<cplx, 4> parse_amplitudes(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4)
    throw ParseError("depolarizing_general needs four comma-separated amplitudes, got " +
                     std::to_string(parts.size()));
  std::array<cplx, 4> a{};
  for (std::size_t i = 0; i < 4; ++i) a[i] = parse_scalar(trim(parts[i]));
  return a;
}

}  // namespace

std::string_view kind_name(ChannelKind kind) {
  for (const auto& e : kKinds)
    if (e.kind == kind) return e.name;
  return "unknown";
}

ChannelKind kind_from_name(std::string_view name) {
  for (const auto& e : kKinds)
    if (e.name == name) return e.kind;
  throw InputError("unknown channel kind '" + std::string(name) + "'");
}

ChannelSpec parse_channel_spec(std::string_view text) {
  const auto parts = split(trim(text), ':');
  ChannelSpec spec;
  spec.kind = kind_from_name(trim(parts[0]));
  if (spec.kind == ChannelKind::depolarizing_general) {
    if (parts.size() == 2) {
      spec.env_amplitudes = parse_amplitudes(parts[1]);
    } else if (parts.size() == 3) {
      spec.theta = parse_real(trim(parts[1]));
      spec.env_amplitudes = parse_amplitudes(parts[2]);
    } else {
      throw ParseError("expected depolarizing_general:[theta:]alpha,beta,gamma,delta");
    }
    return spec;
  }
  if (parts.size() == 1 && spec.kind == ChannelKind::identity) return spec;
  if (parts.size() != 2)
    throw ParseError("expected kind:theta, got '" + std::string(text) + "'");
  spec.theta = parse_real(trim(parts[1]));
  return spec;
}

std::string format_channel_spec(const ChannelSpec& spec) {
  std::string s(kind_name(spec.kind));
  s += ':';
  s += fmt17(spec.theta);
  if (spec.env_amplitudes) {
    s += ':';
    for (std::size_t i = 0; i < 4; ++i) {
      if (i) s += ',';
      s += fmt_complex((*spec.env_amplitudes)[i]);
    }
  }
  return s;
}

KrausChannel make_rotation(Axis axis, double theta) {
  switch (axis) {
    case Axis::x: return KrausChannel({gates::rx(theta)}, theta_label("rotation_x", theta));
    case Axis::y: return KrausChannel({gates::ry(-theta)}, theta_label("rotation_y", theta));
    case Axis::z: return KrausChannel({gates::rz(theta)}, theta_label("rotation_z", theta));
  }
  throw InputError("bad axis");
}

KrausChannel make_deformation(Deformation kind, double theta) {
  ComplexMatrix sigma;
  std::string_view name;
  switch (kind) {
    case Deformation::bit_flip: sigma = gates::pauli_x(); name = "bit_flip"; break;
    case Deformation::bit_phase_flip: sigma = gates::pauli_y(); name = "bit_phase_flip"; break;
    case Deformation::phase_flip: sigma = gates::pauli_z(); name = "phase_flip"; break;
  }
  check_intensity(theta, name);
  const double c = std::abs(std::cos(theta / 2));
  const double s = std::abs(std::sin(theta / 2));
  return prune(KrausChannel({ComplexMatrix::identity(2) * c, sigma * s},
                            theta_label(name, theta)));
}

ComplexMatrix damping_frame(Axis axis, Direction direction) {
  const double h = 1.0 / std::numbers::sqrt2;
  const bool upper_x = direction == Direction::plus;   // U† |0> = |+x>
  const bool upper_y = direction == Direction::minus;  // U† |0> = |-y>
  switch (axis) {
    case Axis::z: return ComplexMatrix::identity(2);
    case Axis::x:
      return upper_x ? ComplexMatrix::from_rows({{h, h}, {-h, h}})
                     : ComplexMatrix::from_rows({{h, -h}, {h, h}});
    case Axis::y:
      return upper_y ? ComplexMatrix::from_rows({{h, I * h}, {I * h, h}})
                     : ComplexMatrix::from_rows({{h, -I * h}, {-I * h, h}});
  }
  throw InputError("bad axis");
}

KrausChannel make_amp_damp(Axis axis, Direction direction, double theta) {
  static constexpr std::string_view names[3][2] = {
      {"amp_damp_x_plus", "amp_damp_x_minus"},
      {"amp_damp_y_plus", "amp_damp_y_minus"},
      {"amp_damp_z_plus", "amp_damp_z_minus"}};
  const std::string_view name =
      names[static_cast<int>(axis)][direction == Direction::plus ? 0 : 1];
  check_intensity(theta, name);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);

  ComplexMatrix f0, f1;
  if (axis == Axis::z && direction == Direction::minus) {
    f0 = ComplexMatrix::from_rows({{c, 0}, {0, 1}});
    f1 = ComplexMatrix::from_rows({{0, 0}, {s, 0}});
  } else {
    f0 = ComplexMatrix::from_rows({{1, 0}, {0, c}});
    f1 = ComplexMatrix::from_rows({{0, s}, {0, 0}});
  }
  if (axis != Axis::z) {
    const ComplexMatrix u = damping_frame(axis, direction);
    f0 = u.adjoint() * f0 * u;
    f1 = u.adjoint() * f1 * u;
  }
  return prune(KrausChannel({std::move(f0), std::move(f1)}, theta_label(name, theta)));
}

KrausChannel make_depolarizing_general(const std::array<cplx, 4>& env_amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : env_amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw NormalizationError("environment amplitudes are not normalized: sum |a|^2 = " +
                             std::to_string(norm2));
  const std::array<ComplexMatrix, 4> paulis = {ComplexMatrix::identity(2), gates::pauli_x(),
                                               gates::pauli_y(), gates::pauli_z()};
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = 0; k < 4; ++k) ops.push_back(paulis[k] * std::abs(env_amplitudes[k]));
  return prune(KrausChannel(std::move(ops), "depolarizing_general"));
}

KrausChannel make_depolarizing_standard(double theta) {
  check_intensity(theta, "depolarizing_standard");
  const double c = std::cos(theta);
  const double w = std::sin(theta) / std::sqrt(3.0);
  return prune(KrausChannel({ComplexMatrix::identity(2) * c, gates::pauli_x() * w,
                             gates::pauli_y() * w, gates::pauli_z() * w},
                            theta_label("depolarizing_standard", theta)));
}

KrausChannel make_channel(const ChannelSpec& spec) {
  const double t = spec.theta;
  switch (spec.kind) {
    case ChannelKind::identity: return KrausChannel({ComplexMatrix::identity(2)}, "identity");
    case ChannelKind::rotation_x: return make_rotation(Axis::x, t);
    case ChannelKind::rotation_y: return make_rotation(Axis::y, t);
    case ChannelKind::rotation_z: return make_rotation(Axis::z, t);
    case ChannelKind::bit_flip: return make_deformation(Deformation::bit_flip, t);
    case ChannelKind::bit_phase_flip: return make_deformation(Deformation::bit_phase_flip, t);
    case ChannelKind::phase_flip: return make_deformation(Deformation::phase_flip, t);
    case ChannelKind::amp_damp_z_minus: return make_amp_damp(Axis::z, Direction::minus, t);
    case ChannelKind::amp_damp_z_plus: return make_amp_damp(Axis::z, Direction::plus, t);
    case ChannelKind::amp_damp_x_minus: return make_amp_damp(Axis::x, Direction::minus, t);
    case ChannelKind::amp_damp_x_plus: return make_amp_damp(Axis::x, Direction::plus, t);
    case ChannelKind::amp_damp_y_minus: return make_amp_damp(Axis::y, Direction::minus, t);
    case ChannelKind::amp_damp_y_plus: return make_amp_damp(Axis::y, Direction::plus, t);
    case ChannelKind::depolarizing_general:
      if (!spec.env_amplitudes)
        throw InputError("depolarizing_general needs environment amplitudes");
      return make_depolarizing_general(*spec.env_amplitudes);
    case ChannelKind::depolarizing_standard: return make_depolarizing_standard(t);
  }
  throw InputError("unknown channel kind");
}

}  // namespace qsd
