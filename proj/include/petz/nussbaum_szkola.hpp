#pragma once

// Classical pair (P, Q) on eigenvector index pairs (i, j) that reproduces the
// Petz-Renyi divergences of (rho, sigma):
//   P_ij = p_i |<p_i|q_j>|^2,  Q_ij = q_j |<p_i|q_j>|^2,
//   Theta_ij = <p_i|theta|q_j> / <p_i|q_j>  (0 where the overlap vanishes).
// Index layout is row-major (i, j) with both eigenbases ordered by descending
// eigenvalue.

#include <complex>
#include <optional>
#include <vector>

#include "petz/classical.hpp"
#include "petz/extended_real.hpp"
#include "petz/linalg.hpp"

namespace petz {

/// |<p_i|q_j>|^2 at or below this is treated as an exact zero.
inline constexpr double kNsOverlapCutoff = 1e-14;

struct NsEmbedding {
  std::size_t dim = 0;
  Distribution p;
  Distribution q;
  /// Empty when no observable was supplied.
  std::vector<std::complex<double>> theta;
  /// Eigenvalues of rho and sigma in the embedding's (descending) order.
  std::vector<double> rho_eigenvalues;
  std::vector<double> sigma_eigenvalues;

  std::size_t index(std::size_t i, std::size_t j) const { return i * dim + j; }
};

NsEmbedding ns_embed(const DensityMatrix& rho, const DensityMatrix& sigma,
                     const std::optional<Observable>& theta = std::nullopt);

struct DivergencePair {
  ExtendedReal classical;
  ExtendedReal quantum;
};

/// D_alpha(P|Q) from the embedding and D_alpha(rho||sigma) from the matrices, evaluated independently.
/// alpha == 1 compares the relative entropies.
DivergencePair ns_divergence_identity(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha);

struct NsMoments {
  std::complex<double> mean_p;  // <Theta>_P
  std::complex<double> mean_q;  // <Theta>_Q
  double second_p = 0.0;        // <|Theta|^2>_P
  double second_q = 0.0;        // <|Theta|^2>_Q
  double tr_rho_theta = 0.0;
  double tr_sigma_theta = 0.0;
  double tr_rho_theta_sq = 0.0;
  double tr_sigma_theta_sq = 0.0;
};

NsMoments ns_moment_relations(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta);

}  // namespace petz
