#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qsd {

using cplx = std::complex<double>;

/// Default tolerances. `algebraic` is used for identities such as
/// Hermiticity, unit trace and completeness; `spectral` for anything that
/// goes through an eigendecomposition.
struct Tolerances {
  double algebraic = 1e-12;
  double spectral = 1e-10;
};

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Throws DimensionError if entries.size() != rows * cols and InputError
  /// if any entry is not finite.
  static ComplexMatrix from_row_major(std::size_t rows, std::size_t cols,
                                      std::vector<cplx> entries);
  /// Nested-list literal, mostly for tests: {{1, 0}, {0, 1}}.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const cplx> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> data() const noexcept { return data_; }
  std::span<cplx> data() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  cplx trace() const;
  /// Largest entry modulus.
  double max_abs() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Matrix-vector product.
std::vector<cplx> apply(const ComplexMatrix& m, std::span<const cplx> v);

/// max_{ij} |a_ij - b_ij|; throws DimensionError on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |U^dagger U - I|.
double unitarity_defect(const ComplexMatrix& u);

/// ‖M - M^dagger‖_max.
double hermiticity_defect(const ComplexMatrix& m);

/// Returns log2(n) if n is a power of two >= 1, otherwise -1.
int log2_exact(std::size_t n) noexcept;

}  // namespace qsd
