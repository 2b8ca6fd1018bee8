#pragma once

#include "petz/extended_real.hpp"
#include "petz/linalg.hpp"

namespace petz {

/// Thresholds deciding when a divergence is reported as +infinity.
struct SupportTolerances {
  /// tr(rho Pi_ker(sigma)) above this means supp(rho) is not inside supp(sigma).
  double leakage = 1e-12;
  /// tr(Pi_supp(rho) Pi_supp(sigma)) at or below this means orthogonal supports.
  double orthogonality = 1e-12;
  /// trace overlaps at or below this are treated as zero.
  double min_overlap = 1e-300;
};

/// Petz-Renyi relative entropy (1/(alpha-1)) ln tr(rho^alpha sigma^(1-alpha)).
///
/// alpha must lie in (0,1) or (1,inf); alpha == 1 throws DomainError (use
/// quantum_relative_entropy). Returns +infinity for alpha > 1 when supp(rho)
/// is not contained in supp(sigma), and for alpha < 1 when the supports are
/// orthogonal.
ExtendedReal petz_renyi(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha,
                        const SupportTolerances& tol = {});

/// tr(rho ln rho) - tr(rho ln sigma); +infinity when supp(rho) is not inside supp(sigma).
ExtendedReal quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                      const SupportTolerances& tol = {});

/// (1/2)(D_alpha(rho||sigma) + D_alpha(sigma||rho)); alpha == 1 averages the
/// relative entropies. Infinity in either direction propagates.
ExtendedReal symmetric_petz_renyi(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha,
                                  const SupportTolerances& tol = {});

/// [tr(sqrt(rho) sqrt(sigma))]^2
double holevo_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Default alpha grid used by the sweeps.
inline constexpr double kDefaultAlphas[] = {0.3, 0.5, 0.9, 1.0, 1.5, 2.0, 3.0};

}  // namespace petz
