#pragma once

#include "qsdiag/circuit.hpp"
#include "qsdiag/core.hpp"

namespace qsd {

/// Two-qubit pure state |Ψ> = Σ C_{iα} |i>|α> whose partial trace over the
/// ancilla α (the least significant qubit) is the input ρ. Gauge: C01 = 0
/// and C00 real, non-negative.
struct PurificationResult {
  PureState state;
  cplx c00, c01, c10, c11;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi = 0.0;
};

/// θ1, θ2 ∈ [0, π/2] reproduce the moduli
///   cos θ1 = |C00|, cos θ2 sin θ1 = |C10|, sin θ2 sin θ1 = |C11|
/// and φ = arg C10 = −arg ρ12 (0 when ρ12 = 0).
struct PurificationAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi = 0.0;
};

/// Closed-form purification
///   C00 = √ρ11, C01 = 0, C10 = ρ12*/√ρ11, C11 = √((ρ11ρ22 − |ρ12|²)/ρ11).
/// For ρ11 = 0 the continuity limit C10 = 0, C11 = √ρ22 = 1 is used.
/// Throws DimensionError unless rho is a single qubit.
PurificationResult purify_single_qubit(const DensityMatrix& rho);

PurificationAngles purification_angles(const DensityMatrix& rho);

/// Two-qubit circuit preparing the purification from |00>:
///   ry(2θ1) 1; cry(2θ2) 1 0        amplitude moduli
///   phase(φ) 1; cphase(−φ) 1 0     phase of the |10> amplitude
/// The controlled-phase angle −φ equals arg ρ12.
Circuit synthesize_purification_circuit(const DensityMatrix& rho);

}  // namespace qsd
