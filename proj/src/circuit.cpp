#include "qsdiag/circuit.hpp"

#include <cctype>
#include <cstdio>
#include <optional>

#include "qsdiag/error.hpp"
#include "qsdiag/gates.hpp"
#include "qsdiag/scalar_expr.hpp"

namespace qsd {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
  return buf;
}

std::string fmt_complex(cplx z) {
  if (z.imag() == 0.0) return fmt17(z.real());
  if (z.real() == 0.0) return fmt17(z.imag()) + "i";
  std::string s = fmt17(z.real());
  if (!std::signbit(z.imag())) s += '+';
  return s + fmt17(z.imag()) + "i";
}

std::size_t leading_controls(std::string_view name) {
  if (name == "cnot") return 1;
  std::size_t m = 0;
  while (m < name.size() && name[m] == 'c') ++m;
  return m;
}

ComplexMatrix base_gate(std::string_view base, const std::vector<double>& params) {
  auto want = [&](std::size_t n) {
    if (params.size() != n)
      throw InputError("gate '" + std::string(base) + "' takes " + std::to_string(n) +
                       " parameter(s), got " + std::to_string(params.size()));
  };
  if (base == "x") { want(0); return gates::pauli_x(); }
  if (base == "y") { want(0); return gates::pauli_y(); }
  if (base == "z") { want(0); return gates::pauli_z(); }
  if (base == "h") { want(0); return gates::hadamard(); }
  if (base == "s") { want(0); return gates::s_gate(); }
  if (base == "t") { want(0); return gates::t_gate(); }
  if (base == "swap") { want(0); return gates::swap(); }
  if (base == "rx") { want(1); return gates::rx(params[0]); }
  if (base == "ry") { want(1); return gates::ry(params[0]); }
  if (base == "rz") { want(1); return gates::rz(params[0]); }
  if (base == "phase") { want(1); return gates::phase(params[0]); }
  throw InputError("unknown gate '" + std::string(base) + "'");
}

void check_targets(const std::vector<int>& targets, int n_qubits) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n_qubits)
      throw InputError("qubit " + std::to_string(targets[i]) + " out of range (register has " +
                       std::to_string(n_qubits) + " qubits)");
    for (std::size_t j = 0; j < i; ++j)
      if (targets[j] == targets[i])
        throw InputError("qubit " + std::to_string(targets[i]) + " used twice in one gate");
  }
}

void apply_gate(std::vector<cplx>& state, const Gate& g) {
  const std::size_t k = g.targets.size();
  const std::size_t dg = std::size_t{1} << k;
  std::vector<std::size_t> offset(dg, 0);
  std::size_t mask = 0;
  for (std::size_t j = 0; j < k; ++j) mask |= std::size_t{1} << g.targets[j];
  for (std::size_t loc = 0; loc < dg; ++loc)
    for (std::size_t j = 0; j < k; ++j)
      if ((loc >> (k - 1 - j)) & 1U) offset[loc] |= std::size_t{1} << g.targets[j];

  std::vector<cplx> in(dg), out(dg);
  for (std::size_t b = 0; b < state.size(); ++b) {
    if (b & mask) continue;
    for (std::size_t loc = 0; loc < dg; ++loc) in[loc] = state[b | offset[loc]];
    for (std::size_t r = 0; r < dg; ++r) {
      cplx acc = 0.0;
      for (std::size_t c = 0; c < dg; ++c) acc += g.matrix(r, c) * in[c];
      out[r] = acc;
    }
    for (std::size_t loc = 0; loc < dg; ++loc) state[b | offset[loc]] = out[loc];
  }
}

// ---- DSL scanning -------------------------------------------------------

class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t col0) const {
    throw ParseError(msg, line_, col0 + 1);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      fail("expected a gate name or directive");
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))))
      fail("expected a non-negative integer", start);
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 9) fail("integer too large", start);
    return std::stol(digits);
  }

  /// Balanced group starting at `open`; returns the inner text and its column.
  std::pair<std::string_view, std::size_t> group(char open, char close) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != open) fail(std::string("expected '") + open + "'");
    const std::size_t start = pos_;
    int depth = 0;
    for (; pos_ < s_.size(); ++pos_) {
      if (s_[pos_] == open) ++depth;
      else if (s_[pos_] == close && --depth == 0) {
        ++pos_;
        return {s_.substr(start + 1, pos_ - start - 2), start + 1};
      }
    }
    fail(std::string("unbalanced '") + open + "'", start);
  }

  cplx scalar(std::string_view text, std::size_t col0) const {
    try {
      return parse_scalar(text);
    } catch (const ParseError& e) {
      fail(std::string("bad number '") + std::string(text) + "'",
           col0 + (e.column() > 0 ? e.column() - 1 : 0));
    }
  }

  /// Splits at commas that are not nested in brackets/parentheses.
  static std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view s,
                                                                          std::size_t col0) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      if (i == s.size() || (s[i] == ',' && depth == 0)) {
        std::size_t a = start, b = i;
        while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
        out.emplace_back(s.substr(a, b - a), col0 + a);
        start = i + 1;
      } else if (s[i] == '(' || s[i] == '[') {
        ++depth;
      } else if (s[i] == ')' || s[i] == ']') {
        --depth;
      }
    }
    return out;
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

ComplexMatrix parse_matrix_literal(LineScanner& sc, std::string_view inner, std::size_t col0) {
  const auto rows = LineScanner::split_top(inner, col0);
  std::vector<cplx> entries;
  std::size_t ncols = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto [row, rcol] = rows[r];
    if (row.size() < 2 || row.front() != '[' || row.back() != ']')
      sc.fail("matrix rows must be bracketed lists", rcol);
    const auto cells = LineScanner::split_top(row.substr(1, row.size() - 2), rcol + 1);
    if (r == 0) ncols = cells.size();
    else if (cells.size() != ncols) sc.fail("ragged matrix literal", rcol);
    for (const auto& [cell, ccol] : cells) entries.push_back(sc.scalar(cell, ccol));
  }
  if (rows.size() != ncols) sc.fail("matrix literal must be square", col0);
  return ComplexMatrix::from_row_major(rows.size(), ncols, std::move(entries));
}

}  // namespace

std::string Gate::to_dsl() const {
  std::string s = name;
  const std::size_t m = leading_controls(name);
  if (name.substr(m) == "u") {
    const std::size_t d = matrix.rows() >> m;
    const std::size_t off = matrix.rows() - d;
    s += " [";
    for (std::size_t r = 0; r < d; ++r) {
      s += r ? ",[" : "[";
      for (std::size_t c = 0; c < d; ++c) {
        if (c) s += ',';
        s += fmt_complex(matrix(off + r, off + c));
      }
      s += ']';
    }
    s += ']';
  } else if (!params.empty()) {
    s += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ',';
      s += fmt17(params[i]);
    }
    s += ')';
  }
  for (int t : targets) s += ' ' + std::to_string(t);
  return s;
}

Gate make_gate(std::string_view name, std::vector<double> params, std::vector<int> targets) {
  const std::size_t m = leading_controls(name);
  const std::string_view base = name == "cnot" ? std::string_view("x") : name.substr(m);
  if (base == "u") throw InputError("gate 'u' needs a matrix literal");
  ComplexMatrix matrix = base_gate(base, params);
  for (std::size_t i = 0; i < m; ++i) matrix = gates::controlled(matrix);
  const std::size_t arity = static_cast<std::size_t>(log2_exact(matrix.rows()));
  if (targets.size() != arity)
    throw InputError("gate '" + std::string(name) + "' acts on " + std::to_string(arity) +
                     " qubit(s), got " + std::to_string(targets.size()));
  check_targets(targets, kMaxQubits);
  return Gate{std::string(name), std::move(params), std::move(targets), std::move(matrix)};
}

Gate matrix_gate(ComplexMatrix matrix, std::vector<int> targets, int n_controls) {
  const int k = log2_exact(matrix.rows());
  if (!matrix.is_square() || k < 1)
    throw DimensionError("matrix gate must be square with a power-of-two size");
  const double defect = unitarity_defect(matrix);
  if (defect > 1e-10)
    throw DomainError("matrix literal is not unitary (defect " + std::to_string(defect) + ")");
  for (int i = 0; i < n_controls; ++i) matrix = gates::controlled(matrix);
  if (targets.size() != static_cast<std::size_t>(k + n_controls))
    throw InputError("matrix gate acts on " + std::to_string(k + n_controls) +
                     " qubit(s), got " + std::to_string(targets.size()));
  check_targets(targets, kMaxQubits);
  return Gate{std::string(static_cast<std::size_t>(n_controls), 'c') + "u", {}, std::move(targets),
              std::move(matrix)};
}

Circuit Circuit::on_register(int n_qubits, std::size_t input_index) {
  Circuit c;
  c.n_qubits = n_qubits;
  c.input = PureState::basis(n_qubits, input_index);
  return c;
}

Circuit& Circuit::add(Gate gate) {
  check_targets(gate.targets, n_qubits);
  gates.push_back(std::move(gate));
  return *this;
}

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  bool input_seen = false;
  std::size_t line_no = 0;
  std::size_t begin = 0;

  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineScanner sc(line, line_no);
    if (sc.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t name_col = sc.pos();
    const std::string word = sc.identifier();

    if (word == "qubits") {
      if (circuit) sc.fail("'qubits' given twice", name_col);
      sc.skip_ws();
      const std::size_t col = sc.pos();
      const long n = sc.integer();
      if (n < 1 || n > kMaxQubits)
        sc.fail("register of " + std::to_string(n) + " qubits is out of range (1.." +
                    std::to_string(kMaxQubits) + ")",
                col);
      circuit = Circuit::on_register(static_cast<int>(n));
    } else if (!circuit) {
      sc.fail("the circuit must start with 'qubits N'", name_col);
    } else if (word == "input") {
      if (input_seen) sc.fail("'input' given twice", name_col);
      if (!circuit->gates.empty()) sc.fail("'input' must precede the gates", name_col);
      input_seen = true;
      if (sc.peek() == '[') {
        const auto [inner, col] = sc.group('[', ']');
        std::vector<cplx> amps;
        for (const auto& [cell, ccol] : LineScanner::split_top(inner, col))
          amps.push_back(sc.scalar(cell, ccol));
        const std::size_t dim = std::size_t{1} << circuit->n_qubits;
        if (amps.size() != dim)
          sc.fail("input needs " + std::to_string(dim) + " amplitudes, got " +
                      std::to_string(amps.size()),
                  col);
        try {
          circuit->input = PureState::from_amplitudes(std::move(amps), 1e-10);
        } catch (const NormalizationError& e) {
          sc.fail(e.what(), col);
        }
      } else {
        sc.skip_ws();
        const std::size_t col = sc.pos();
        const long k = sc.integer();
        if (static_cast<std::size_t>(k) >= (std::size_t{1} << circuit->n_qubits))
          sc.fail("input basis index " + std::to_string(k) + " out of range", col);
        circuit->input = PureState::basis(circuit->n_qubits, static_cast<std::size_t>(k));
      }
    } else if (word == "trace") {
      while (!sc.at_end()) {
        const std::size_t col = sc.pos();
        const long q = sc.integer();
        if (q >= circuit->n_qubits)
          sc.fail("qubit " + std::to_string(q) + " out of range (register has " +
                      std::to_string(circuit->n_qubits) + " qubits)",
                  col);
        circuit->traced.push_back(static_cast<int>(q));
      }
      if (circuit->traced.empty()) sc.fail("'trace' needs at least one qubit", name_col);
    } else {
      std::vector<double> params;
      if (sc.peek() == '(') {
        const auto [inner, col] = sc.group('(', ')');
        for (const auto& [cell, ccol] : LineScanner::split_top(inner, col)) {
          const cplx v = sc.scalar(cell, ccol);
          if (std::abs(v.imag()) > 1e-15) sc.fail("gate parameters must be real", ccol);
          params.push_back(v.real());
        }
      }
      std::optional<ComplexMatrix> literal;
      if (sc.peek() == '[') {
        const auto [inner, col] = sc.group('[', ']');
        literal = parse_matrix_literal(sc, inner, col);
      }
      std::vector<int> targets;
      std::vector<std::size_t> target_cols;
      while (!sc.at_end()) {
        const std::size_t col = sc.pos();
        const long q = sc.integer();
        if (q >= circuit->n_qubits)
          sc.fail("qubit " + std::to_string(q) + " out of range (register has " +
                      std::to_string(circuit->n_qubits) + " qubits)",
                  col);
        targets.push_back(static_cast<int>(q));
        target_cols.push_back(col);
      }
      try {
        const std::size_t m = leading_controls(word);
        if (word.substr(m) == "u") {
          if (!literal) sc.fail("gate '" + word + "' needs a matrix literal", name_col);
          if (literal->rows() > 4) sc.fail("matrix literals are limited to two qubits", name_col);
          circuit->add(matrix_gate(std::move(*literal), std::move(targets), static_cast<int>(m)));
        } else {
          if (literal) sc.fail("gate '" + word + "' does not take a matrix literal", name_col);
          circuit->add(make_gate(word, std::move(params), std::move(targets)));
        }
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        sc.fail(e.what(), name_col);
      }
    }
    if (end == text.size()) break;
  }
  if (!circuit) throw ParseError("empty circuit: expected 'qubits N'", 1, 1);
  return std::move(*circuit);
}

std::string to_dsl(const Circuit& circuit) {
  std::string s = "qubits " + std::to_string(circuit.n_qubits) + "\n";
  const auto& a = circuit.input.amplitudes();
  std::size_t basis_index = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == cplx{1.0, 0.0}) basis_index = i;
    else if (a[i] != cplx{}) { basis_index = a.size(); break; }
  }
  if (basis_index < a.size()) {
    s += "input " + std::to_string(basis_index) + "\n";
  } else {
    s += "input [";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) s += ", ";
      s += fmt_complex(a[i]);
    }
    s += "]\n";
  }
  if (!circuit.traced.empty()) {
    s += "trace";
    for (int q : circuit.traced) s += ' ' + std::to_string(q);
    s += '\n';
  }
  for (const auto& g : circuit.gates) s += g.to_dsl() + "\n";
  return s;
}

PureState simulate(const Circuit& circuit) {
  std::vector<cplx> state = circuit.input.amplitudes();
  for (const auto& g : circuit.gates) apply_gate(state, g);
  return PureState::from_amplitudes(std::move(state), 1e-9);
}

}  // namespace qsd
