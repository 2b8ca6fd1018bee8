#pragma once

// The uncertainty statistic s(rho, sigma; theta), the sign operator omega of
// rho - sigma, and verification routines that evaluate both sides of each
// inequality of the symmetric Petz-Renyi uncertainty relation family.

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "petz/classical.hpp"
#include "petz/extended_real.hpp"
#include "petz/linalg.hpp"

namespace petz {

struct MomentSummary {
  double mean_rho = 0.0;
  double mean_sigma = 0.0;
  double var_rho = 0.0;    // clipped at 0
  double var_sigma = 0.0;  // clipped at 0

  double mean_gap() const { return mean_rho - mean_sigma; }
};

MomentSummary moments(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta);
MomentSummary moments(const Distribution& p, const Distribution& q, std::span<const double> theta);

/// sqrt[(1/2) dm^2 / (var_rho + var_sigma + (1/2) dm^2)]. Returns 0 on 0/0 and when |dm| is
/// within 64 ulp of sqrt<theta^2>, where the gap is roundoff.
double s_from_moments(const MomentSummary& m);

double s_statistic(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta);

struct OmegaResult {
  Observable omega;
  /// Projector onto the kernel of rho - sigma.
  ComplexMatrix kernel_projector;
  /// tr(rho eps) (equal to tr(sigma eps))
  double epsilon = 0.0;
};

/// omega = sum_{w_k != 0} sign(w_k) |w_k><w_k| over the spectrum of rho - sigma;
/// |w_k| <= 1e-12 max|w| counts as zero.
OmegaResult omega_operator(const DensityMatrix& rho, const DensityMatrix& sigma);

/// One evaluated inequality lhs >= rhs.
struct InequalityMargin {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  /// lhs - rhs; +inf when lhs is +inf.
  double margin = 0.0;
  double alpha = 0.0;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  /// rhs recomputed along an independent closed-form route, when one exists.
  std::optional<double> rhs_crosscheck;
};

InequalityMargin make_margin(std::string id, double lhs, double rhs, double alpha, std::size_t dim);

/// D~_alpha(rho, sigma) >= B(alpha, s(rho, sigma; theta))
InequalityMargin verify_theorem(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta,
                                double alpha);

struct HolevoMargins {
  InequalityMargin s_vs_trace;      // s(rho, sigma; omega) >= T(rho, sigma)
  InequalityMargin bound_via_s;     // D~_alpha >= B(alpha, s(rho, sigma; omega))
  InequalityMargin bound_via_trace; // D~_alpha >= B(alpha, T)
  double trace_distance = 0.0;
  double s_omega = 0.0;
  double epsilon = 0.0;
};

HolevoMargins verify_generalized_holevo(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha);

/// (var_rho + var_sigma) / ((1/2) dm^2) >= f(alpha, D~_alpha). Throws PreconditionError on equal means.
/// The cross-check is 1/sinh^2(g(D)/2) at alpha = 1 and F_H/(1-F_H) at alpha = 1/2.
InequalityMargin verify_inverted_ur(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta,
                                    double alpha);

/// Classical inverted relation with Distribution moments (hysteretic TUR at alpha = 1).
InequalityMargin verify_classical_turs(const Distribution& p, const Distribution& q, std::span<const double> theta,
                                       double alpha);

/// Classical form of the theorem: D~_alpha(P, Q) >= B(alpha, s(P, Q; theta)).
InequalityMargin verify_classical_theorem(const Distribution& p, const Distribution& q,
                                          std::span<const double> theta, double alpha);

/// Var_P(theta)/<theta>_P^2 >= f(1, <Sigma>) for theta odd under the involution.
InequalityMargin verify_exchange_tur(const Distribution& p, const Involution& m, std::span<const double> theta);

/// D~_alpha(P, Q) >= B(alpha, sqrt(delta(P, Q)))
InequalityMargin verify_lemma1(const Distribution& p, const Distribution& q, double alpha);

/// Every link of D~(rho,sigma) = D~(P,Q) >= B(alpha, sqrt(delta(P,Q))) >= B(alpha, s(rho,sigma;theta)).
struct TheoremChain {
  ExtendedReal quantum;
  ExtendedReal classical;
  double bound_sqrt_delta = 0.0;
  double bound_s = 0.0;
  double sqrt_delta = 0.0;
  double s = 0.0;
};

TheoremChain theorem_chain(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta,
                           double alpha);

}  // namespace petz
