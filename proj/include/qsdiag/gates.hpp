#pragma once

#include "qsdiag/matrix.hpp"

namespace qsd::gates {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
ComplexMatrix s_gate();
ComplexMatrix t_gate();

// Rotations as in [[cos θ/2, -i sin θ/2], [-i sin θ/2, cos θ/2]] etc.
ComplexMatrix rx(double theta);
ComplexMatrix ry(double theta);
ComplexMatrix rz(double theta);

/// diag(1, e^{iφ}).
ComplexMatrix phase(double phi);
ComplexMatrix swap();

/// Block-diagonal diag(I, u): the control is the most significant qubit.
ComplexMatrix controlled(const ComplexMatrix& u);

}  // namespace qsd::gates
