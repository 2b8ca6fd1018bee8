#include "petz/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "petz/errors.hpp"

namespace petz {
namespace {

constexpr int kMaxBisection = 200;
constexpr double kBisectionWidth = 1e-15;

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError(std::string(who) + ": alpha must be a positive finite number");
  }
}

}  // namespace

double log_cosh(double u) {
  const double a = std::fabs(u);
  if (a < 1.0) {
    const double sh = std::sinh(0.5 * a);
    return std::log1p(2.0 * sh * sh);
  }
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double artanh(double x) {
  const double c = std::clamp(x, -kMaxBoundArgument, kMaxBoundArgument);
  return 0.5 * (std::log1p(c) - std::log1p(-c));
}

double cosh_ratio_log(double alpha, double x) { return log_cosh((2.0 * alpha - 1.0) * x) - log_cosh(x); }

double bound_B(double alpha, double x) {
  check_alpha(alpha, "bound_B");
  if (!(x >= 0.0) || !(x < 1.0)) throw DomainError("bound_B: x must lie in [0, 1)");
  const double u = artanh(x);
  if (std::fabs(alpha - 1.0) <= kAlphaOneBand) return 2.0 * x * u;
  return cosh_ratio_log(alpha, u) / (alpha - 1.0);
}

InverseResult bound_B_inverse(double alpha, double y) {
  check_alpha(alpha, "bound_B_inverse");
  if (std::isnan(y) || y < 0.0) throw DomainError("bound_B_inverse: y must be nonnegative");
  if (y == 0.0) return {0.0, false};
  if (y >= bound_B(alpha, kMaxBoundArgument)) return {kMaxBoundArgument, true};

  double lo = 0.0, hi = kMaxBoundArgument;
  for (int it = 0; it < kMaxBisection && hi - lo > kBisectionWidth; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (bound_B(alpha, mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return {0.5 * (lo + hi), false};
}

double uncertainty_f(double alpha, double divergence) {
  check_alpha(alpha, "uncertainty_f");
  if (std::isnan(divergence) || divergence < 0.0) throw DomainError("uncertainty_f: divergence must be nonnegative");
  if (divergence == 0.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(divergence)) return 0.0;
  const double x = bound_B_inverse(alpha, divergence).x;
  return 1.0 / (x * x) - 1.0;
}

double h_entropy(double x) { return x * std::tanh(0.5 * x); }

double h_entropy_inverse(double y) {
  if (std::isnan(y) || y < 0.0) throw DomainError("h_entropy_inverse: y must be nonnegative");
  if (y == 0.0) return 0.0;
  // h(x) >= x - 2 for x >= 0, so x = y + 2 brackets the root
  double lo = 0.0, hi = y + 2.0;
  for (int it = 0; it < kMaxBisection && hi - lo > kBisectionWidth * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (h_entropy(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double uncertainty_f_alpha_one(double divergence) {
  if (divergence == 0.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(divergence)) return 0.0;
  const double sh = std::sinh(0.5 * h_entropy_inverse(divergence));
  return 1.0 / (sh * sh);
}

double uncertainty_f_alpha_half(double divergence) {
  if (divergence == 0.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(divergence)) return 0.0;
  // F/(1-F) with F = e^{-D}
  return 1.0 / std::expm1(divergence);
}

double pinsker_rhs(double alpha, double trace_distance) {
  check_alpha(alpha, "pinsker_rhs");
  return 2.0 * std::min(alpha, 1.0) * trace_distance * trace_distance;
}

}  // namespace petz
