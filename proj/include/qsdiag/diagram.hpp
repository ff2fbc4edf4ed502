#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsdiag/circuit.hpp"

namespace qsd {

/// Unitary entries with modulus at or below this are "null" and get no edge.
inline constexpr double kEdgeTolerance = 1e-12;

enum class DiagramMode { complete, simplified };

/// Non-null entry U(to, from) of an immersed gate: amplitude flowing from
/// basis line `from` into basis line `to`.
struct Edge {
  std::size_t from;
  std::size_t to;
  cplx amplitude;
};

struct DiagramLayer {
  std::string label;        ///< gate in DSL spelling
  std::vector<Edge> edges;  ///< sorted by (from, to)
};

/// Diagram of states: one horizontal line per basis state (2^n lines, line i
/// is |i>, top to bottom), one layer per gate.
///
/// `active[t]` and `amplitude[t]` describe the lines at boundary t, where
/// t = 0 is the input and t = k is the output of layer k. A line is active
/// when some chain of edges reaches it from the input support; amplitudes are
/// the simulated state vector at that boundary.
struct StateDiagram {
  int n_qubits = 0;
  std::size_t n_lines = 0;
  DiagramMode mode = DiagramMode::complete;
  std::vector<DiagramLayer> layers;
  std::vector<std::vector<bool>> active;
  std::vector<std::vector<cplx>> amplitude;
  std::vector<int> traced;  ///< environment qubits, annotation only

  /// Indices of active lines at boundary t, ascending.
  std::vector<std::size_t> active_lines(std::size_t boundary) const;
};

/// Complete mode keeps every non-null edge; simplified mode drops edges that
/// leave inactive lines. Throws DimensionError if the register exceeds
/// kMaxQubits.
StateDiagram build_diagram(const Circuit& circuit, DiagramMode mode,
                           double edge_tolerance = kEdgeTolerance);

/// Lines whose simulated amplitude exceeds `tol` in modulus.
std::vector<std::size_t> support(const PureState& state, double tol = kEdgeTolerance);

std::string_view mode_name(DiagramMode mode);
/// "complete" or "simplified"; throws InputError otherwise.
DiagramMode mode_from_name(std::string_view name);

}  // namespace qsd
