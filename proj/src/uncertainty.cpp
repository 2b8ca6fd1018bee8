#include "petz/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "petz/bounds.hpp"
#include "petz/divergences.hpp"
#include "petz/nussbaum_szkola.hpp"

namespace petz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGapRoundoff = 64.0 * std::numeric_limits<double>::epsilon();

// B(alpha, x) with x pinned below 1; only reached with x -> 1 when the divergence side is already infinite.
double bound_at(double alpha, double x) { return bound_B(alpha, std::min(x, kMaxBoundArgument)); }

double value_or_inf(ExtendedReal d) { return d.is_infinite() ? kInf : d.value(); }

void require_distinct_means(const MomentSummary& m, double second_scale, const char* who) {
  if (std::fabs(m.mean_gap()) <= 1e-12 * (1.0 + std::sqrt(std::max(0.0, second_scale)))) {
    throw PreconditionError(std::string(who) + ": the observable has equal means under both states");
  }
}

double uncertainty_ratio(const MomentSummary& m) {
  const double gap = m.mean_gap();
  return (m.var_rho + m.var_sigma) / (0.5 * gap * gap);
}

double rhs_f(double alpha, double divergence) {
  return std::isinf(divergence) ? 0.0 : uncertainty_f(alpha, divergence);
}

}  // namespace

MomentSummary moments(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta) {
  require_same_dim(rho.dim(), sigma.dim(), "moments");
  require_same_dim(rho.dim(), theta.dim(), "moments");
  const ComplexMatrix sq = (theta.matrix() * theta.matrix()).hermitian_part();
  MomentSummary m;
  m.mean_rho = expectation(rho, theta.matrix());
  m.mean_sigma = expectation(sigma, theta.matrix());
  m.var_rho = std::max(0.0, expectation(rho, sq) - m.mean_rho * m.mean_rho);
  m.var_sigma = std::max(0.0, expectation(sigma, sq) - m.mean_sigma * m.mean_sigma);
  return m;
}

MomentSummary moments(const Distribution& p, const Distribution& q, std::span<const double> theta) {
  std::vector<double> sq(theta.size());
  for (std::size_t s = 0; s < theta.size(); ++s) sq[s] = theta[s] * theta[s];
  MomentSummary m;
  m.mean_rho = p.mean(theta);
  m.mean_sigma = q.mean(theta);
  m.var_rho = std::max(0.0, p.mean(sq) - m.mean_rho * m.mean_rho);
  m.var_sigma = std::max(0.0, q.mean(sq) - m.mean_sigma * m.mean_sigma);
  return m;
}

double s_from_moments(const MomentSummary& m) {
  // A mean gap at roundoff level relative to sqrt<theta^2> carries no sign or size information.
  const double scale = std::sqrt(std::max(m.var_rho + m.mean_rho * m.mean_rho, m.var_sigma + m.mean_sigma * m.mean_sigma));
  if (std::fabs(m.mean_gap()) <= kGapRoundoff * scale) return 0.0;
  const double half_gap = 0.5 * m.mean_gap() * m.mean_gap();
  const double denom = m.var_rho + m.var_sigma + half_gap;
  if (denom <= 0.0) return 0.0;
  return std::sqrt(half_gap / denom);
}

double s_statistic(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta) {
  return s_from_moments(moments(rho, sigma, theta));
}

OmegaResult omega_operator(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "omega_operator");
  const std::size_t n = rho.dim();
  const EigenDecomposition diff = hermitian_eigen(rho.matrix() - sigma.matrix());
  double max_abs = 0.0;
  for (double w : diff.values) max_abs = std::max(max_abs, std::fabs(w));
  const double cutoff = 1e-12 * max_abs;

  ComplexMatrix omega(n), kernel(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::vector<cplx> v = diff.vector(k);
    const double w = diff.values[k];
    const ComplexMatrix proj = ComplexMatrix::outer(v);
    if (std::fabs(w) <= cutoff)
      kernel += proj;
    else if (w > 0.0)
      omega += proj;
    else
      omega -= proj;
  }
  const double eps = std::clamp(expectation(rho, kernel), 0.0, 1.0);
  return OmegaResult{Observable(omega), std::move(kernel), eps};
}

InequalityMargin make_margin(std::string id, double lhs, double rhs, double alpha, std::size_t dim) {
  InequalityMargin m;
  m.id = std::move(id);
  m.lhs = lhs;
  m.rhs = rhs;
  m.margin = std::isinf(lhs) && lhs > 0.0 ? kInf : lhs - rhs;
  m.alpha = alpha;
  m.dim = dim;
  return m;
}

InequalityMargin verify_theorem(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta,
                                double alpha) {
  const double d = value_or_inf(symmetric_petz_renyi(rho, sigma, alpha));
  const double s = s_statistic(rho, sigma, theta);
  return make_margin("theorem", d, bound_at(alpha, s), alpha, rho.dim());
}

HolevoMargins verify_generalized_holevo(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  const OmegaResult om = omega_operator(rho, sigma);
  const double t = trace_distance(rho, sigma);
  const double s = s_statistic(rho, sigma, om.omega);
  const double d = value_or_inf(symmetric_petz_renyi(rho, sigma, alpha));
  HolevoMargins out{
      make_margin("holevo-s-vs-T", s, t, alpha, rho.dim()),
      make_margin("holevo-bound-s", d, bound_at(alpha, s), alpha, rho.dim()),
      make_margin("holevo-bound-T", d, bound_at(alpha, t), alpha, rho.dim()),
      t,
      s,
      om.epsilon,
  };
  return out;
}

InequalityMargin verify_inverted_ur(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta,
                                    double alpha) {
  const MomentSummary m = moments(rho, sigma, theta);
  const ComplexMatrix sq = (theta.matrix() * theta.matrix()).hermitian_part();
  require_distinct_means(m, expectation(rho, sq) + expectation(sigma, sq), "verify_inverted_ur");
  const double d = value_or_inf(symmetric_petz_renyi(rho, sigma, alpha));
  InequalityMargin out = make_margin("inverted-ur", uncertainty_ratio(m), rhs_f(alpha, d), alpha, rho.dim());
  if (alpha == 1.0) {
    out.rhs_crosscheck = uncertainty_f_alpha_one(d);
  } else if (alpha == 0.5) {
    const double f = holevo_fidelity(rho, sigma);
    out.rhs_crosscheck = f / (1.0 - f);
  }
  return out;
}

InequalityMargin verify_classical_turs(const Distribution& p, const Distribution& q, std::span<const double> theta,
                                       double alpha) {
  const MomentSummary m = moments(p, q, theta);
  double scale = 0.0;
  for (double x : theta) scale = std::max(scale, x * x);
  require_distinct_means(m, scale, "verify_classical_turs");
  const double d = value_or_inf(symmetric_classical_renyi(p, q, alpha));
  InequalityMargin out = make_margin("classical-tur", uncertainty_ratio(m), rhs_f(alpha, d), alpha, p.size());
  if (alpha == 1.0) {
    out.rhs_crosscheck = uncertainty_f_alpha_one(d);
  } else if (alpha == 0.5) {
    double bc = 0.0;
    for (std::size_t s = 0; s < p.size(); ++s) bc += std::sqrt(p[s] * q[s]);
    const double f = bc * bc;
    out.rhs_crosscheck = f / (1.0 - f);
  }
  return out;
}

InequalityMargin verify_classical_theorem(const Distribution& p, const Distribution& q,
                                          std::span<const double> theta, double alpha) {
  const double d = value_or_inf(symmetric_classical_renyi(p, q, alpha));
  const double s = s_from_moments(moments(p, q, theta));
  return make_margin("classical-theorem", d, bound_at(alpha, s), alpha, p.size());
}

InequalityMargin verify_exchange_tur(const Distribution& p, const Involution& m, std::span<const double> theta) {
  if (theta.size() != p.size() || m.size() != p.size()) {
    throw ValidationError(ValidationError::Kind::Shape, "verify_exchange_tur: length mismatch");
  }
  double scale = 0.0;
  for (double x : theta) scale = std::max(scale, std::fabs(x));
  for (std::size_t s = 0; s < theta.size(); ++s) {
    if (std::fabs(theta[s] + theta[m(s)]) > 1e-12 * std::max(1.0, scale)) {
      throw PreconditionError("verify_exchange_tur: theta is not odd under the involution");
    }
  }
  if (!mutually_continuous(p, m)) {
    throw PreconditionError("verify_exchange_tur: P and P o m are not mutually absolutely continuous");
  }
  const double mean = p.mean(theta);
  if (std::fabs(mean) <= 1e-12 * std::max(1.0, scale)) {
    throw PreconditionError("verify_exchange_tur: <theta> vanishes");
  }
  std::vector<double> sq(theta.size());
  for (std::size_t s = 0; s < theta.size(); ++s) sq[s] = theta[s] * theta[s];
  const double var = std::max(0.0, p.mean(sq) - mean * mean);

  const EntropyVariable sigma = entropy_variable(p, m);
  const double production = std::max(0.0, p.mean(sigma.values));

  InequalityMargin out = make_margin("exchange-tur", var / (mean * mean), rhs_f(1.0, production), 1.0, p.size());
  out.rhs_crosscheck = uncertainty_f_alpha_one(production);
  return out;
}

InequalityMargin verify_lemma1(const Distribution& p, const Distribution& q, double alpha) {
  const double d = value_or_inf(symmetric_classical_renyi(p, q, alpha));
  const double root = std::sqrt(triangular_discrimination(p, q));
  return make_margin("lemma1", d, bound_at(alpha, root), alpha, p.size());
}

TheoremChain theorem_chain(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta,
                           double alpha) {
  const NsEmbedding e = ns_embed(rho, sigma);
  TheoremChain c;
  c.quantum = symmetric_petz_renyi(rho, sigma, alpha);
  c.classical = symmetric_classical_renyi(e.p, e.q, alpha);
  c.sqrt_delta = std::sqrt(triangular_discrimination(e.p, e.q));
  c.s = s_statistic(rho, sigma, theta);
  c.bound_sqrt_delta = bound_at(alpha, c.sqrt_delta);
  c.bound_s = bound_at(alpha, c.s);
  return c;
}

}  // namespace petz
