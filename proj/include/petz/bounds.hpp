#pragma once

// The bound function
//   B(alpha, x) = (1/(alpha-1)) ln[cosh((2 alpha - 1) artanh x) / cosh(artanh x)],
// its alpha -> 1 limit 2 x artanh x, its numerical inverse, the inverted
// uncertainty function f(alpha, D) = 1/[B^-1(alpha, D)]^2 - 1 and the Pinsker
// comparator 2 min(alpha, 1) T^2.

namespace petz {

/// Largest argument accepted by the inverse search; artanh clamps here too.
inline constexpr double kMaxBoundArgument = 1.0 - 1e-15;

/// |alpha - 1| at or below this uses the analytic limit.
inline constexpr double kAlphaOneBand = 1e-8;

/// ln cosh(u), accurate for small |u| and overflow-free for large |u|.
double log_cosh(double u);

/// 0.5 ln((1+x)/(1-x)) with x clamped to [-kMaxBoundArgument, kMaxBoundArgument].
double artanh(double x);

/// B(alpha, x) for alpha > 0, 0 <= x < 1. Throws DomainError otherwise.
double bound_B(double alpha, double x);

struct InverseResult {
  double x = 0.0;
  /// y exceeded B(alpha, kMaxBoundArgument); x is pinned to that argument.
  bool saturated = false;
};

/// Bisection inverse of B(alpha, .) on [0, kMaxBoundArgument]. Throws DomainError for y < 0.
InverseResult bound_B_inverse(double alpha, double y);

/// f(alpha, D) = 1/[B^-1(alpha, D)]^2 - 1; +infinity at D = 0, 0 at D = +infinity.
double uncertainty_f(double alpha, double divergence);

/// h(x) = x tanh(x/2)
double h_entropy(double x);

/// Inverse of h on x >= 0 by bisection.
double h_entropy_inverse(double y);

/// Independent alpha = 1 route: 1/sinh^2(g(D)/2) with g the inverse of h.
double uncertainty_f_alpha_one(double divergence);

/// Independent alpha = 1/2 route: F/(1-F) with F = exp(-D).
double uncertainty_f_alpha_half(double divergence);

/// 2 min(alpha, 1) T^2
double pinsker_rhs(double alpha, double trace_distance);

/// g(alpha, x) = ln[cosh((2 alpha - 1) x) / cosh(x)], convex in alpha.
double cosh_ratio_log(double alpha, double x);

}  // namespace petz
