#include "petz/kernels.hpp"
#include "petz/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace petz {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ValidationError(ValidationError::Kind::Shape,
                          std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                              std::to_string(b) + ")");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, cplx(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries) : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw ValidationError(ValidationError::Kind::Shape,
                          "matrix needs " + std::to_string(dim_ * dim_) + " entries, got " +
                              std::to_string(data_.size()));
  }
  for (const cplx& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError(ValidationError::Kind::NotFinite, "matrix has non-finite entries");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermitian_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    out(i, i) = (*this)(i, i).real();
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const cplx v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double scale) {
  for (cplx& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix product");
  ComplexMatrix c(a.dim_);
  kernels::active().zgemm(a.dim_, a.data_.data(), b.data_.data(), c.data_.data());
  return c;
}

cplx trace_product_hermitian(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "trace product");
  return kernels::zdotc(b.data(), a.data());
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "trace product");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t += a(i, j) * b(j, i);
  return t;
}

}  // namespace petz
