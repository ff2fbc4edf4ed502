#include "qsdiag/composite.hpp"

#include <algorithm>
#include <string>

#include "qsdiag/error.hpp"

namespace qsd {

namespace {

// Scatters the low bits of `value` into the bit positions listed in `positions`.
std::size_t deposit(std::size_t value, const std::vector<int>& positions) {
  std::size_t out = 0;
  for (std::size_t k = 0; k < positions.size(); ++k)
    if ((value >> k) & 1U) out |= std::size_t{1} << positions[k];
  return out;
}

void check_permutation(int n, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != n)
    throw InputError("permutation has " + std::to_string(perm.size()) + " entries for " +
                     std::to_string(n) + " qubits");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
      throw InputError("invalid qubit permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
}

std::size_t permute_index(std::size_t b, std::span<const int> perm) {
  std::size_t out = 0;
  for (std::size_t q = 0; q < perm.size(); ++q)
    if ((b >> q) & 1U) out |= std::size_t{1} << perm[q];
  return out;
}

}  // namespace

QubitSubset QubitSubset::of(int n_qubits, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= n_qubits)
      throw InputError("qubit " + std::to_string(indices[i]) + " out of range for " +
                       std::to_string(n_qubits) + " qubits");
    if (i > 0 && indices[i] == indices[i - 1])
      throw InputError("qubit " + std::to_string(indices[i]) + " listed twice");
  }
  return QubitSubset(n_qubits, std::move(indices));
}

bool QubitSubset::contains(int q) const {
  return std::binary_search(indices_.begin(), indices_.end(), q);
}

QubitSubset QubitSubset::complement() const {
  std::vector<int> rest;
  for (int q = 0; q < n_qubits_; ++q)
    if (!contains(q)) rest.push_back(q);
  return QubitSubset(n_qubits_, std::move(rest));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& traced) {
  const int n = rho.n_qubits();
  if (traced.n_qubits() != n)
    throw InputError("qubit subset was built for " + std::to_string(traced.n_qubits()) +
                     " qubits, density matrix has " + std::to_string(n));
  if (traced.size() == 0) throw InputError("partial trace over an empty qubit set");
  if (static_cast<int>(traced.size()) == n)
    throw InputError("tracing out the whole register is not supported");

  const std::vector<int>& gone = traced.indices();
  const std::vector<int> kept = traced.complement().indices();
  const std::size_t dk = std::size_t{1} << kept.size();
  const std::size_t dt = std::size_t{1} << gone.size();

  std::vector<std::size_t> kept_idx(dk), gone_idx(dt);
  for (std::size_t r = 0; r < dk; ++r) kept_idx[r] = deposit(r, kept);
  for (std::size_t t = 0; t < dt; ++t) gone_idx[t] = deposit(t, gone);

  ComplexMatrix out(dk, dk);
  for (std::size_t r = 0; r < dk; ++r)
    for (std::size_t c = 0; c < dk; ++c) {
      cplx acc = 0.0;
      for (std::size_t t = 0; t < dt; ++t)
        acc += rho(kept_idx[r] | gone_idx[t], kept_idx[c] | gone_idx[t]);
      out(r, c) = acc;
    }
  return DensityMatrix::unchecked(std::move(out));
}

DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const int> permutation) {
  check_permutation(rho.n_qubits(), permutation);
  const std::size_t d = rho.dim();
  std::vector<std::size_t> map(d);
  for (std::size_t b = 0; b < d; ++b) map[b] = permute_index(b, permutation);
  ComplexMatrix out(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out(map[r], map[c]) = rho(r, c);
  return DensityMatrix::unchecked(std::move(out));
}

ComplexMatrix permutation_unitary(int n_qubits, std::span<const int> permutation) {
  check_permutation(n_qubits, permutation);
  const std::size_t d = std::size_t{1} << n_qubits;
  ComplexMatrix p(d, d);
  for (std::size_t b = 0; b < d; ++b) p(permute_index(b, permutation), b) = 1.0;
  return p;
}

ComplexMatrix immerse_gate(const ComplexMatrix& gate, std::span<const int> targets,
                           int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw DimensionError("register size " + std::to_string(n_qubits) + " out of range");
  const std::size_t k = targets.size();
  if (k == 0 || !gate.is_square() || gate.rows() != (std::size_t{1} << k))
    throw DimensionError("gate of size " + std::to_string(gate.rows()) + "x" +
                         std::to_string(gate.cols()) + " does not act on " +
                         std::to_string(k) + " qubit(s)");
  std::size_t mask = 0;
  for (int t : targets) {
    if (t < 0 || t >= n_qubits)
      throw InputError("qubit " + std::to_string(t) + " out of range for " +
                       std::to_string(n_qubits) + " qubits");
    if ((mask >> t) & 1U) throw InputError("qubit " + std::to_string(t) + " listed twice");
    mask |= std::size_t{1} << t;
  }
  // Gate-local bit (k-1-j) lives on register qubit targets[j].
  auto local = [&](std::size_t b) {
    std::size_t g = 0;
    for (std::size_t j = 0; j < k; ++j)
      if ((b >> targets[j]) & 1U) g |= std::size_t{1} << (k - 1 - j);
    return g;
  };
  auto global = [&](std::size_t g) {
    std::size_t b = 0;
    for (std::size_t j = 0; j < k; ++j)
      if ((g >> (k - 1 - j)) & 1U) b |= std::size_t{1} << targets[j];
    return b;
  };

  const std::size_t d = std::size_t{1} << n_qubits;
  const std::size_t dg = gate.rows();
  ComplexMatrix out(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    const std::size_t rest = c & ~mask;
    const std::size_t gc = local(c);
    for (std::size_t gr = 0; gr < dg; ++gr) out(rest | global(gr), c) = gate(gr, gc);
  }
  return out;
}

}  // namespace qsd
