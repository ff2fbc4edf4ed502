#include "qsdiag/gates.hpp"

#include <cmath>
#include <numbers>

namespace qsd::gates {

namespace {
constexpr cplx I{0.0, 1.0};
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }
ComplexMatrix pauli_y() { return ComplexMatrix::from_rows({{0, -I}, {I, 0}}); }
ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1, 0}, {0, -1}}); }

ComplexMatrix hadamard() {
  const double h = 1.0 / std::numbers::sqrt2;
  return ComplexMatrix::from_rows({{h, h}, {h, -h}});
}

ComplexMatrix s_gate() { return ComplexMatrix::from_rows({{1, 0}, {0, I}}); }
ComplexMatrix t_gate() { return phase(std::numbers::pi / 4); }

ComplexMatrix rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return ComplexMatrix::from_rows({{c, -I * s}, {-I * s, c}});
}

ComplexMatrix ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return ComplexMatrix::from_rows({{c, -s}, {s, c}});
}

ComplexMatrix rz(double theta) {
  return ComplexMatrix::from_rows(
      {{std::exp(-I * (theta / 2)), 0}, {0, std::exp(I * (theta / 2))}});
}

ComplexMatrix phase(double phi) {
  return ComplexMatrix::from_rows({{1, 0}, {0, std::exp(I * phi)}});
}

ComplexMatrix swap() {
  return ComplexMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}

ComplexMatrix controlled(const ComplexMatrix& u) {
  const std::size_t d = u.rows();
  ComplexMatrix out = ComplexMatrix::identity(2 * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out(d + r, d + c) = u(r, c);
  return out;
}

}  // namespace qsd::gates
