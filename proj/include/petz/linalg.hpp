#pragma once

// Dense complex Hermitian linear algebra for desk-scale dimensions (up to ~64).

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "petz/errors.hpp"

namespace petz {

using cplx = std::complex<double>;

/// Square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// dim x dim zero matrix.
  explicit ComplexMatrix(std::size_t dim);
  /// Takes ownership of dim*dim row-major entries; throws ValidationError on size mismatch or non-finite entries.
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// |v><v|
  static ComplexMatrix outer(std::span<const cplx> v);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  cplx& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const cplx& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  std::span<const cplx> data() const noexcept { return data_; }
  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * dim_, dim_}; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  /// max_ij |A_ij - conj(A_ji)|
  double hermitian_defect() const;
  /// (A + A^dagger) / 2
  ComplexMatrix hermitian_part() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(double scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// tr(A B) for a general A and Hermitian B (uses B_ji = conj(B_ij)).
cplx trace_product_hermitian(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(A B) for arbitrary square A, B.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Spectral decomposition of a Hermitian matrix.
///
/// Eigenvalues ascend. Column k of `vectors` is the eigenvector for values[k];
/// each eigenvector's phase is fixed so its first component with modulus above
/// 1e-12 is real and positive.
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;

  std::size_t dim() const noexcept { return values.size(); }
  std::vector<cplx> vector(std::size_t k) const;
  /// V diag(f(lambda_k)) V^dagger
  ComplexMatrix reconstruct(const std::function<double(double)>& f) const;
  ComplexMatrix reconstruct() const;
};

struct JacobiOptions {
  double hermitian_tol = 1e-10;   // relative to max(1, max |A_ij|)
  double convergence = 1e-14;     // off-diagonal Frobenius norm relative to ||A||_F
  int max_sweeps = 100;
};

/// Cyclic complex Jacobi diagonalization. Throws ValidationError(NotHermitian).
EigenDecomposition hermitian_eigen(const ComplexMatrix& m, const JacobiOptions& options = {});

struct ValidationTolerances {
  double hermiticity = 1e-10;
  double psd = 1e-10;
  double trace = 1e-10;
  /// eigenvalue lambda is treated as 0 when lambda <= support * max |lambda|
  double support = 1e-12;
};

/// Positive-semidefinite unit-trace Hermitian matrix with its spectrum.
///
/// Eigenvalues below the support threshold are stored as exact zeros and the
/// remaining ones renormalized to unit sum; `matrix()` is rebuilt from that
/// clipped spectrum.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const EigenDecomposition& spectrum() const noexcept { return spectrum_; }
  std::span<const double> eigenvalues() const noexcept { return spectrum_.values; }
  const std::vector<bool>& support_mask() const noexcept { return support_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  std::size_t rank() const;

  /// Projector onto the span of eigenvectors with (mask[k] == in_support).
  ComplexMatrix support_projector(bool in_support = true) const;

 private:
  friend DensityMatrix validate_density(const ComplexMatrix&, const ValidationTolerances&);
  ComplexMatrix matrix_;
  EigenDecomposition spectrum_;
  std::vector<bool> support_;
};

DensityMatrix validate_density(const ComplexMatrix& m, const ValidationTolerances& tol = {});

/// Hermitian operator. The stored matrix is the Hermitian part of the input.
class Observable {
 public:
  explicit Observable(const ComplexMatrix& m, double hermitian_tol = 1e-10);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

 private:
  ComplexMatrix matrix_;
};

/// rho^a on the support; eigenvalues outside the support map to 0 for every a.
ComplexMatrix matrix_power(const DensityMatrix& rho, double a);

/// ln(rho) on the support, 0 on the kernel.
ComplexMatrix matrix_log(const DensityMatrix& rho);

/// tr(rho A) for Hermitian A, real part.
double expectation(const DensityMatrix& rho, const ComplexMatrix& a);

/// (1/2) sum_k |w_k| over the eigenvalues of rho - sigma.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace petz
