#include "petz/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace petz {
namespace {

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError(std::string(who) + ": alpha must be a positive finite number");
  }
}

bool leaks_out_of_support(const DensityMatrix& rho, const DensityMatrix& sigma, double tol) {
  if (sigma.rank() == sigma.dim()) return false;
  return expectation(rho, sigma.support_projector(false)) > tol;
}

bool orthogonal_supports(const DensityMatrix& rho, const DensityMatrix& sigma, double tol) {
  const double overlap = trace_product_hermitian(rho.support_projector(true), sigma.support_projector(true)).real();
  return overlap <= tol;
}

}  // namespace

ExtendedReal petz_renyi(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha,
                        const SupportTolerances& tol) {
  require_same_dim(rho.dim(), sigma.dim(), "petz_renyi");
  check_alpha(alpha, "petz_renyi");
  if (alpha == 1.0) throw DomainError("petz_renyi: alpha = 1, use quantum_relative_entropy");
  if (rho.matrix() == sigma.matrix()) return ExtendedReal(0.0);

  if (alpha > 1.0) {
    if (leaks_out_of_support(rho, sigma, tol.leakage)) return ExtendedReal::infinity();
  } else if (orthogonal_supports(rho, sigma, tol.orthogonality)) {
    return ExtendedReal::infinity();
  }

  // sigma^(1-alpha) is Hermitian, so tr(rho^alpha sigma^(1-alpha)) is a conjugated dot product.
  const double overlap =
      trace_product_hermitian(matrix_power(rho, alpha), matrix_power(sigma, 1.0 - alpha)).real();
  if (overlap <= tol.min_overlap) return ExtendedReal::infinity();
  return ExtendedReal(std::log(overlap) / (alpha - 1.0));
}

ExtendedReal quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                      const SupportTolerances& tol) {
  require_same_dim(rho.dim(), sigma.dim(), "quantum_relative_entropy");
  if (rho.matrix() == sigma.matrix()) return ExtendedReal(0.0);
  if (leaks_out_of_support(rho, sigma, tol.leakage)) return ExtendedReal::infinity();

  double neg_entropy = 0.0;
  for (double p : rho.eigenvalues())
    if (p > 0.0) neg_entropy += p * std::log(p);
  const double cross = expectation(rho, matrix_log(sigma));
  return ExtendedReal(neg_entropy - cross);
}

ExtendedReal symmetric_petz_renyi(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha,
                                  const SupportTolerances& tol) {
  check_alpha(alpha, "symmetric_petz_renyi");
  if (alpha == 1.0) {
    const ExtendedReal forward = quantum_relative_entropy(rho, sigma, tol);
    if (forward.is_infinite()) return forward;
    return midpoint(forward, quantum_relative_entropy(sigma, rho, tol));
  }
  const ExtendedReal forward = petz_renyi(rho, sigma, alpha, tol);
  if (forward.is_infinite()) return forward;
  return midpoint(forward, petz_renyi(sigma, rho, alpha, tol));
}

double holevo_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "holevo_fidelity");
  const double overlap = trace_product_hermitian(matrix_power(rho, 0.5), matrix_power(sigma, 0.5)).real();
  const double clipped = std::clamp(overlap, 0.0, 1.0);
  return clipped * clipped;
}

}  // namespace petz
