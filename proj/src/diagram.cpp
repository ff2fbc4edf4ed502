#include "qsdiag/diagram.hpp"

#include <string>

#include "qsdiag/composite.hpp"
#include "qsdiag/error.hpp"

namespace qsd {

std::vector<std::size_t> StateDiagram::active_lines(std::size_t boundary) const {
  std::vector<std::size_t> out;
  const auto& flags = active.at(boundary);
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> support(const PureState& state, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < state.dim(); ++i)
    if (std::abs(state[i]) > tol) out.push_back(i);
  return out;
}

std::string_view mode_name(DiagramMode mode) {
  return mode == DiagramMode::complete ? "complete" : "simplified";
}

DiagramMode mode_from_name(std::string_view name) {
  if (name == "complete") return DiagramMode::complete;
  if (name == "simplified") return DiagramMode::simplified;
  throw InputError("unknown diagram mode '" + std::string(name) +
                   "' (expected complete or simplified)");
}

StateDiagram build_diagram(const Circuit& circuit, DiagramMode mode, double edge_tolerance) {
  if (circuit.n_qubits < 1 || circuit.n_qubits > kMaxQubits)
    throw DimensionError("diagram register of " + std::to_string(circuit.n_qubits) +
                         " qubits is too large (max " + std::to_string(kMaxQubits) + ")");
  StateDiagram d;
  d.n_qubits = circuit.n_qubits;
  d.n_lines = std::size_t{1} << circuit.n_qubits;
  d.mode = mode;
  d.traced = circuit.traced;

  std::vector<cplx> state = circuit.input.amplitudes();
  std::vector<bool> live(d.n_lines);
  for (std::size_t i = 0; i < d.n_lines; ++i) live[i] = std::abs(state[i]) > edge_tolerance;
  d.active.push_back(live);
  d.amplitude.push_back(state);

  for (const auto& gate : circuit.gates) {
    const ComplexMatrix u = immerse_gate(gate.matrix, gate.targets, circuit.n_qubits);
    DiagramLayer layer{gate.to_dsl(), {}};
    std::vector<bool> next(d.n_lines, false);
    for (std::size_t from = 0; from < d.n_lines; ++from) {
      for (std::size_t to = 0; to < d.n_lines; ++to) {
        const cplx a = u(to, from);
        if (std::abs(a) <= edge_tolerance) continue;
        if (live[from]) next[to] = true;
        if (mode == DiagramMode::simplified && !live[from]) continue;
        layer.edges.push_back({from, to, a});
      }
    }
    std::vector<cplx> out(d.n_lines, cplx{});
    for (std::size_t to = 0; to < d.n_lines; ++to) {
      cplx acc = 0.0;
      for (std::size_t from = 0; from < d.n_lines; ++from) acc += u(to, from) * state[from];
      out[to] = acc;
    }
    state = std::move(out);
    live = std::move(next);
    d.layers.push_back(std::move(layer));
    d.active.push_back(live);
    d.amplitude.push_back(state);
  }
  return d;
}

}  // namespace qsd
