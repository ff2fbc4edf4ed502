#include "qsdiag/kraus.hpp"

#include <cmath>
#include <string>

#include "qsdiag/error.hpp"

namespace qsd {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators, std::string name)
    : operators_(std::move(operators)), name_(std::move(name)) {
  if (operators_.empty()) throw InputError("Kraus channel needs at least one operator");
  dim_ = operators_.front().rows();
  if (log2_exact(dim_) < 0)
    throw DimensionError("Kraus operator dimension " + std::to_string(dim_) +
                         " is not a power of two");
  for (const auto& f : operators_) {
    if (!f.is_square() || f.rows() != dim_)
      throw DimensionError("Kraus operators must all be " + std::to_string(dim_) + "x" +
                           std::to_string(dim_));
    if (!f.all_finite()) throw InputError("Kraus operator has non-finite entries");
  }
}

double validate_channel(const KrausChannel& ch) {
  ComplexMatrix sum(ch.dim(), ch.dim());
  for (const auto& f : ch.operators()) sum += f.adjoint() * f;
  return max_abs_diff(sum, ComplexMatrix::identity(ch.dim()));
}

ComplexMatrix apply_kraus_sum(const KrausChannel& ch, const ComplexMatrix& x) {
  if (x.rows() != ch.dim() || x.cols() != ch.dim())
    throw DimensionError("channel acts on dimension " + std::to_string(ch.dim()) +
                         ", operand is " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()));
  ComplexMatrix out(ch.dim(), ch.dim());
  for (const auto& f : ch.operators()) out += f * x * f.adjoint();
  return out;
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho, double tol) {
  if (rho.dim() != ch.dim())
    throw DimensionError("channel acts on dimension " + std::to_string(ch.dim()) +
                         ", density matrix has dimension " + std::to_string(rho.dim()));
  const double defect = validate_channel(ch);
  if (defect > tol)
    throw IncompleteChannelError("channel completeness defect " + std::to_string(defect) +
                                 " exceeds tolerance");
  return DensityMatrix::unchecked(apply_kraus_sum(ch, rho.matrix()));
}

KrausChannel prune(const KrausChannel& ch) {
  std::vector<ComplexMatrix> kept;
  for (const auto& f : ch.operators())
    if (f.max_abs() >= kPruneThreshold) kept.push_back(f);
  if (kept.empty()) kept.push_back(ch.operators().front());
  return KrausChannel(std::move(kept), ch.name());
}

KrausChannel kraus_from_unitary(const ComplexMatrix& u, const PureState& env_state, double tol) {
  const std::size_t de = env_state.dim();
  if (!u.is_square() || u.rows() % de != 0 || u.rows() / de < 2)
    throw DimensionError("unitary of size " + std::to_string(u.rows()) +
                         " cannot host an environment of dimension " + std::to_string(de));
  const double defect = unitarity_defect(u);
  if (defect > tol)
    throw DomainError("dilation matrix is not unitary (defect " + std::to_string(defect) + ")");
  const std::size_t d = u.rows() / de;

  std::vector<ComplexMatrix> ops;
  ops.reserve(de);
  for (std::size_t i = 0; i < de; ++i) {
    ComplexMatrix f(d, d);
    for (std::size_t j = 0; j < de; ++j) {
      const cplx e = env_state[j];
      if (e == cplx{}) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) f(r, c) += e * u(i * d + r, j * d + c);
    }
    ops.push_back(std::move(f));
  }
  return prune(KrausChannel(std::move(ops)));
}

ComplexMatrix dilate_single_ancilla(const KrausChannel& ch, double tol) {
  if (ch.size() > 2)
    throw InputError("a single ancilla qubit supports at most two Kraus operators, got " +
                     std::to_string(ch.size()));
  if (ch.dim() != 2) throw InputError("single-ancilla dilation is defined for one qubit");
  const double defect = validate_channel(ch);
  if (defect > tol)
    throw IncompleteChannelError("channel completeness defect " + std::to_string(defect) +
                                 " exceeds tolerance");

  const std::size_t d = ch.dim();
  const std::size_t n = 2 * d;
  std::vector<std::vector<cplx>> cols;
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<cplx> v(n, cplx{});
    for (std::size_t blk = 0; blk < ch.size(); ++blk)
      for (std::size_t r = 0; r < d; ++r) v[blk * d + r] = ch.operators()[blk](r, c);
    cols.push_back(std::move(v));
  }

  auto project_out = [&](std::vector<cplx>& v) {
    for (const auto& q : cols) {
      cplx dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += std::conj(q[k]) * v[k];
      for (std::size_t k = 0; k < n; ++k) v[k] -= dot * q[k];
    }
  };
  // Each new column is the canonical basis vector with the largest residual
  // (lowest index on ties), so no column is built from a tiny remainder.
  while (cols.size() < n) {
    std::vector<cplx> best;
    double best_norm = 0.0;
    for (std::size_t e = 0; e < n; ++e) {
      std::vector<cplx> v(n, cplx{});
      v[e] = 1.0;
      project_out(v);
      project_out(v);  // second pass restores orthogonality lost to rounding
      double norm = 0.0;
      for (const auto& z : v) norm += std::norm(z);
      norm = std::sqrt(norm);
      if (norm > best_norm + 1e-12) {
        best_norm = norm;
        best = std::move(v);
      }
    }
    for (auto& z : best) z /= best_norm;
    cols.push_back(std::move(best));
  }

  ComplexMatrix u(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) u(r, c) = cols[c][r];
  return u;
}

}  // namespace qsd
