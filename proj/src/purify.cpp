#include "qsdiag/purify.hpp"

#include <algorithm>
#include <cmath>

#include "qsdiag/error.hpp"

namespace qsd {

PurificationResult purify_single_qubit(const DensityMatrix& rho) {
  if (rho.n_qubits() != 1) throw DimensionError("purification is implemented for one qubit");
  const double r11 = rho(0, 0).real();
  const double r22 = rho(1, 1).real();
  const cplx r12 = rho(0, 1);

  PurificationResult out{PureState::basis(2, 0), 0.0, 0.0, 0.0, 0.0};
  if (r11 <= 0.0) {
    // ρ12 vanishes with ρ11 for a positive semidefinite ρ.
    out.c11 = std::sqrt(std::max(r22, 0.0));
  } else {
    const double root = std::sqrt(r11);
    out.c00 = root;
    out.c10 = std::conj(r12) / root;
    out.c11 = std::sqrt(std::max((r11 * r22 - std::norm(r12)) / r11, 0.0));
  }
  out.state = PureState::from_amplitudes({out.c00, out.c01, out.c10, out.c11}, 1e-9);

  const double m10 = std::abs(out.c10);
  const double m11 = std::abs(out.c11);
  out.theta1 = std::atan2(std::hypot(m10, m11), out.c00.real());
  out.theta2 = std::atan2(m11, m10);
  out.phi = m10 > 0.0 ? std::arg(out.c10) : 0.0;
  return out;
}

PurificationAngles purification_angles(const DensityMatrix& rho) {
  const auto p = purify_single_qubit(rho);
  return {p.theta1, p.theta2, p.phi};
}

Circuit synthesize_purification_circuit(const DensityMatrix& rho) {
  const auto a = purification_angles(rho);
  Circuit c = Circuit::on_register(2, 0);
  c.add(make_gate("ry", {2.0 * a.theta1}, {1}));
  c.add(make_gate("cry", {2.0 * a.theta2}, {1, 0}));
  c.add(make_gate("phase", {a.phi}, {1}));
  c.add(make_gate("cphase", {-a.phi}, {1, 0}));
  return c;
}

}  // namespace qsd
