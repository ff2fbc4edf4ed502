#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsdiag/core.hpp"

namespace qsd {

/// One gate application. `targets[0]` is the most significant qubit of
/// `matrix`; for controlled gates the controls come first.
struct Gate {
  std::string name;
  std::vector<double> params;
  std::vector<int> targets;
  ComplexMatrix matrix;

  /// DSL spelling, e.g. "cry(2.0943951023931957) 1 0".
  std::string to_dsl() const;
};

/// Builds a named gate from the DSL gate set:
///   x y z h s t swap            (no parameters)
///   rx ry rz phase              (one angle)
///   c<gate>                     (controlled form, controls first; may nest)
///   cnot                        (alias of cx)
/// Throws InputError for unknown names or wrong parameter/qubit counts.
Gate make_gate(std::string_view name, std::vector<double> params, std::vector<int> targets);

/// Arbitrary unitary given as a matrix literal; DSL name "u" (or "cu", ...).
/// Throws DimensionError on size mismatch and DomainError if not unitary
/// within 1e-10.
Gate matrix_gate(ComplexMatrix matrix, std::vector<int> targets, int n_controls = 0);

struct Circuit {
  int n_qubits = 1;
  std::vector<Gate> gates;
  PureState input = PureState::basis(1, 0);
  /// Qubits treated as environment: traced out after the last gate. Only
  /// used for diagram annotation.
  std::vector<int> traced;

  /// Empty circuit on |input_index>.
  static Circuit on_register(int n_qubits, std::size_t input_index = 0);

  /// Appends a gate after checking that its targets fit the register.
  Circuit& add(Gate gate);
};

/// Parses the line-oriented circuit DSL:
///
///   # comment
///   qubits 2
///   input 0                 (basis index, default 0)
///   input [0.6, 0.8i, 0, 0] (or explicit amplitudes)
///   trace 1                 (optional environment qubits)
///   ry(pi/3) 1
///   cry(2.094) 1 0
///   u [[0,1],[1,0]] 0
///
/// Throws ParseError carrying the 1-based line and column of the problem.
Circuit parse_circuit(std::string_view text);

/// Serializes back to DSL text that parse_circuit() accepts.
std::string to_dsl(const Circuit& circuit);

/// Applies the gates in order to the input state.
PureState simulate(const Circuit& circuit);

}  // namespace qsd
