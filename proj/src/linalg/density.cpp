#include "petz/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace petz {
namespace {

ComplexMatrix spectral_apply(const EigenDecomposition& spec, const std::vector<bool>& mask,
                             double (*f)(double, double), double param) {
  const std::size_t n = spec.dim();
  ComplexMatrix scaled = spec.vectors;
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = mask[k] ? f(spec.values[k], param) : 0.0;
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= fk;
  }
  return (scaled * spec.vectors.adjoint()).hermitian_part();
}

}  // namespace

std::size_t DensityMatrix::rank() const {
  return static_cast<std::size_t>(std::count(support_.begin(), support_.end(), true));
}

ComplexMatrix DensityMatrix::support_projector(bool in_support) const {
  const std::size_t n = dim();
  ComplexMatrix p(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (support_[k] != in_support) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) += spectrum_.vectors(i, k) * std::conj(spectrum_.vectors(j, k));
  }
  return p;
}

DensityMatrix validate_density(const ComplexMatrix& m, const ValidationTolerances& tol) {
  if (m.empty()) throw ValidationError(ValidationError::Kind::Shape, "density matrix must have dim >= 1");
  if (m.hermitian_defect() > tol.hermiticity) {
    throw ValidationError(ValidationError::Kind::NotHermitian,
                          "density matrix is not Hermitian (defect " + std::to_string(m.hermitian_defect()) + ")");
  }
  JacobiOptions jopt;
  jopt.hermitian_tol = tol.hermiticity;
  EigenDecomposition spec = hermitian_eigen(m, jopt);

  const double min_eig = spec.values.front();
  if (min_eig < -tol.psd) {
    throw ValidationError(ValidationError::Kind::NotPSD,
                          "density matrix is not positive semidefinite (eigenvalue " + std::to_string(min_eig) + ")");
  }
  double trace = 0.0;
  for (double v : spec.values) trace += v;
  if (std::fabs(trace - 1.0) > tol.trace) {
    throw ValidationError(ValidationError::Kind::TraceNotOne,
                          "density matrix trace is " + std::to_string(trace) + ", expected 1");
  }

  double max_abs = 0.0;
  for (double v : spec.values) max_abs = std::max(max_abs, std::fabs(v));
  const double cutoff = tol.support * max_abs;
  std::vector<bool> support(spec.dim());
  double kept = 0.0;
  for (std::size_t k = 0; k < spec.dim(); ++k) {
    support[k] = spec.values[k] > cutoff;
    if (!support[k]) spec.values[k] = 0.0;
    kept += spec.values[k];
  }
  for (double& v : spec.values) v /= kept;

  DensityMatrix out;
  out.matrix_ = spec.reconstruct().hermitian_part();
  out.spectrum_ = std::move(spec);
  out.support_ = std::move(support);
  return out;
}

Observable::Observable(const ComplexMatrix& m, double hermitian_tol) {
  if (m.empty()) throw ValidationError(ValidationError::Kind::Shape, "observable must have dim >= 1");
  if (m.hermitian_defect() > hermitian_tol * std::max(1.0, m.max_abs())) {
    throw ValidationError(ValidationError::Kind::NotHermitian, "observable is not Hermitian");
  }
  matrix_ = m.hermitian_part();
}

ComplexMatrix matrix_power(const DensityMatrix& rho, double a) {
  if (a == 1.0) return rho.matrix();
  return spectral_apply(rho.spectrum(), rho.support_mask(), [](double x, double p) { return std::pow(x, p); }, a);
}

ComplexMatrix matrix_log(const DensityMatrix& rho) {
  return spectral_apply(rho.spectrum(), rho.support_mask(), [](double x, double) { return std::log(x); }, 0.0);
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& a) {
  return trace_product_hermitian(rho.matrix(), a).real();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "trace_distance");
  const EigenDecomposition diff = hermitian_eigen(rho.matrix() - sigma.matrix());
  double s = 0.0;
  for (double w : diff.values) s += std::fabs(w);
  return 0.5 * s;
}

}  // namespace petz
