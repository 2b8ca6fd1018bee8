#include "petz/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "petz/bounds.hpp"
#include "petz/classical.hpp"
#include "petz/divergences.hpp"
#include "petz/kernels.hpp"
#include "petz/nussbaum_szkola.hpp"
#include "petz/samplers.hpp"
#include "petz/uncertainty.hpp"

namespace petz::harness {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr std::pair<Check, std::string_view> kNames[] = {
    {Check::Theorem, "theorem"},     {Check::Holevo, "holevo"},         {Check::Inverted, "inverted"},
    {Check::Classical, "classical"}, {Check::Exchange, "exchange"},     {Check::NsIdentity, "ns-identity"},
    {Check::Lemma1, "lemma1"},       {Check::Lemma2, "lemma2"},
};

struct TrialContext {
  std::size_t trial;
  std::size_t dim;
  std::uint64_t seed;
  RngStream rng;
  bool deficient;  // odd trials draw reduced-rank states / sparse distributions
};

SweepRow row_from(const TrialContext& ctx, const InequalityMargin& m) {
  SweepRow r;
  r.trial = ctx.trial;
  r.dim = ctx.dim;
  r.alpha = m.alpha;
  r.seed = ctx.seed;
  r.lhs = m.lhs;
  r.rhs = m.rhs;
  r.margin = m.margin;
  r.inequality = m.id;
  r.trace_distance = kNaN;
  r.s = kNaN;
  r.epsilon_kernel = kNaN;
  return r;
}

SweepRow identity_row(const TrialContext& ctx, std::string id, double alpha, double lhs, double rhs) {
  SweepRow r;
  r.trial = ctx.trial;
  r.dim = ctx.dim;
  r.alpha = alpha;
  r.seed = ctx.seed;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = identity_margin(lhs, rhs);
  r.inequality = std::move(id);
  r.trace_distance = kNaN;
  r.s = kNaN;
  r.epsilon_kernel = kNaN;
  return r;
}

std::size_t draw_rank(TrialContext& ctx) {
  return ctx.deficient ? 1 + static_cast<std::size_t>(ctx.rng.below(ctx.dim)) : ctx.dim;
}

DensityMatrix draw_state(TrialContext& ctx) { return random_density(ctx.dim, draw_rank(ctx), ctx.rng); }

Distribution zero_weight(const Distribution& p, std::size_t k) {
  std::vector<double> w(p.weights().begin(), p.weights().end());
  w[k] = 0.0;
  return Distribution::normalized(std::move(w));
}

// Deficient trials zero one weight in each distribution, at different indices,
// so infinite divergences appear without forcing P == Q on two points.
std::pair<Distribution, Distribution> draw_distribution_pair(TrialContext& ctx) {
  Distribution p = random_distribution(ctx.dim, ctx.rng);
  Distribution q = random_distribution(ctx.dim, ctx.rng);
  if (!ctx.deficient) return {std::move(p), std::move(q)};
  const std::size_t kp = ctx.rng.below(ctx.dim);
  const std::size_t kq = (kp + 1 + ctx.rng.below(ctx.dim - 1)) % ctx.dim;
  return {zero_weight(p, kp), zero_weight(q, kq)};
}

double to_double(ExtendedReal x) { return x.value(); }

std::vector<SweepRow> run_trial(Check check, const SweepConfig& cfg, TrialContext ctx) {
  std::vector<SweepRow> rows;
  switch (check) {
    case Check::Theorem: {
      const DensityMatrix rho = draw_state(ctx);
      const DensityMatrix sigma = draw_state(ctx);
      const Observable theta = random_observable(ctx.dim, ctx.rng);
      const double t = trace_distance(rho, sigma);
      const double s = s_statistic(rho, sigma, theta);
      for (double alpha : cfg.alphas) {
        SweepRow r = row_from(ctx, verify_theorem(rho, sigma, theta, alpha));
        r.trace_distance = t;
        r.s = s;
        rows.push_back(std::move(r));
      }
      break;
    }
    case Check::Holevo: {
      const DensityMatrix rho = draw_state(ctx);
      const DensityMatrix sigma = draw_state(ctx);
      for (double alpha : cfg.alphas) {
        const HolevoMargins h = verify_generalized_holevo(rho, sigma, alpha);
        for (const InequalityMargin* m : {&h.s_vs_trace, &h.bound_via_s, &h.bound_via_trace}) {
          SweepRow r = row_from(ctx, *m);
          r.trace_distance = h.trace_distance;
          r.s = h.s_omega;
          r.epsilon_kernel = h.epsilon;
          rows.push_back(std::move(r));
        }
      }
      break;
    }
    case Check::Inverted: {
      const DensityMatrix rho = draw_state(ctx);
      const DensityMatrix sigma = draw_state(ctx);
      const Observable theta = random_observable(ctx.dim, ctx.rng);
      const double s = s_statistic(rho, sigma, theta);
      for (double alpha : cfg.alphas) {
        SweepRow r = row_from(ctx, verify_inverted_ur(rho, sigma, theta, alpha));
        r.s = s;
        rows.push_back(std::move(r));
      }
      break;
    }
    case Check::Classical: {
      const auto [p, q] = draw_distribution_pair(ctx);
      const std::vector<double> theta = random_real_vector(ctx.dim, ctx.rng);
      const double t = total_variation(p, q);
      for (double alpha : cfg.alphas) {
        SweepRow r = row_from(ctx, verify_classical_turs(p, q, theta, alpha));
        r.trace_distance = t;
        rows.push_back(std::move(r));
      }
      break;
    }
    case Check::Exchange: {
      const TrajectoryInstance inst = random_trajectory_instance(ctx.dim, ctx.rng);
      rows.push_back(row_from(ctx, verify_exchange_tur(inst.p, inst.reversal, inst.current)));
      break;
    }
    case Check::NsIdentity: {
      const DensityMatrix rho = draw_state(ctx);
      const DensityMatrix sigma = draw_state(ctx);
      for (double alpha : cfg.alphas) {
        const DivergencePair d = ns_divergence_identity(rho, sigma, alpha);
        rows.push_back(identity_row(ctx, "ns-identity", alpha, to_double(d.classical), to_double(d.quantum)));
      }
      break;
    }
    case Check::Lemma1: {
      const auto [p, q] = draw_distribution_pair(ctx);
      const Distribution full = random_distribution(ctx.dim, ctx.rng);
      const Involution m = random_involution(ctx.dim, ctx.rng);
      for (double alpha : cfg.alphas) {
        rows.push_back(row_from(ctx, verify_lemma1(p, q, alpha)));
        const IdentitySides e = exp_moment_identity_check(full, m, alpha);
        rows.push_back(identity_row(ctx, "lemma1-exp-moment", alpha, e.lhs, e.rhs));
      }
      const EntropyVariable sigma = entropy_variable(full, m);
      rows.push_back(identity_row(ctx, "lemma1-tanh2", kNaN, triangular_discrimination(full, compose(full, m)),
                                  mean_tanh_half_squared(sigma)));
      break;
    }
    case Check::Lemma2: {
      const auto [p, q] = draw_distribution_pair(ctx);
      const std::vector<std::complex<double>> theta = random_complex_vector(ctx.dim, ctx.rng);
      const IdentitySides sides = lemma2_bound(p, q, theta);
      InequalityMargin m = make_margin("lemma2", sides.lhs, sides.rhs, kNaN, ctx.dim);
      rows.push_back(row_from(ctx, m));
      break;
    }
  }
  return rows;
}

std::vector<InequalitySummary> summarize(const std::vector<SweepRow>& rows, double tolerance,
                                         std::size_t& failures) {
  std::vector<InequalitySummary> out;
  std::map<std::string, std::size_t> index;
  failures = 0;
  for (const SweepRow& r : rows) {
    auto [it, inserted] = index.try_emplace(r.inequality, out.size());
    if (inserted) {
      InequalitySummary s;
      s.id = r.inequality;
      s.min_margin = std::numeric_limits<double>::infinity();
      out.push_back(s);
    }
    InequalitySummary& s = out[it->second];
    ++s.rows;
    s.min_margin = std::min(s.min_margin, r.margin);
    if (std::isfinite(r.lhs) && std::isfinite(r.rhs)) s.max_abs_residual = std::max(s.max_abs_residual, std::fabs(r.lhs - r.rhs));
    if (r.margin < -tolerance || std::isnan(r.margin)) {
      ++s.failures;
      ++failures;
    }
  }
  return out;
}

}  // namespace

std::optional<Check> parse_check(std::string_view name) {
  for (const auto& [check, n] : kNames)
    if (n == name) return check;
  return std::nullopt;
}

std::string_view check_name(Check check) {
  for (const auto& [c, n] : kNames)
    if (c == check) return n;
  return "unknown";
}

std::vector<std::string_view> check_names() {
  std::vector<std::string_view> out;
  for (const auto& [c, n] : kNames) out.push_back(n);
  return out;
}

void SweepConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (dims.empty()) throw ConfigError("dims must not be empty");
  for (std::size_t d : dims)
    if (d < 2) throw ConfigError("dims must be >= 2");
  if (alphas.empty()) throw ConfigError("alphas must not be empty");
  for (double a : alphas)
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("alphas must be positive");
  if (!(tolerance >= 0.0)) throw ConfigError("tolerance must be nonnegative");
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
}

const InequalitySummary* SweepReport::find(std::string_view id) const {
  for (const InequalitySummary& s : summary)
    if (s.id == id) return &s;
  return nullptr;
}

double identity_margin(double lhs, double rhs) {
  if (std::isinf(lhs) || std::isinf(rhs)) {
    return lhs == rhs ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  return -std::fabs(lhs - rhs);
}

SweepReport run_sweep(Check check, const SweepConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const RngStream master(config.seed);

  std::vector<std::vector<SweepRow>> per_trial(config.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= config.trials) return;
      try {
        TrialContext ctx{t, config.dims[t % config.dims.size()], config.seed, master.substream(t), t % 2 == 1};
        per_trial[t] = run_trial(check, config, std::move(ctx));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(config.trials);
      }
    }
  };

  const unsigned jobs = std::min<std::size_t>(config.jobs, config.trials);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.check = std::string(check_name(check));
  report.config = config;
  for (auto& rows : per_trial)
    for (auto& r : rows) report.rows.push_back(std::move(r));
  report.summary = summarize(report.rows, config.tolerance, report.failure_count);
  report.kernels = std::string(kernels::active().name);
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SweepReport run_saturation(std::span<const double> epsilons, std::span<const double> alphas, std::uint64_t seed,
                           double tolerance) {
  if (epsilons.empty() || alphas.empty()) throw ConfigError("saturation grids must not be empty");
  for (double a : alphas)
    if (!(a > 0.0)) throw ConfigError("alphas must be positive");
  const auto start = std::chrono::steady_clock::now();

  SweepReport report;
  report.check = "saturation";
  report.config.alphas.assign(alphas.begin(), alphas.end());
  report.config.dims = {2};
  report.config.trials = epsilons.size();
  report.config.seed = seed;
  report.config.tolerance = tolerance;

  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    const SaturatingTriple tri = saturating_pair(epsilons[k], 1.0);
    const double s = s_statistic(tri.rho, tri.sigma, tri.theta);
    const double t = trace_distance(tri.rho, tri.sigma);
    for (double alpha : alphas) {
      const InequalityMargin m = verify_theorem(tri.rho, tri.sigma, tri.theta, alpha);
      SweepRow r;
      r.trial = k;
      r.dim = 2;
      r.alpha = alpha;
      r.seed = seed;
      r.lhs = m.lhs;
      r.rhs = m.rhs;
      r.margin = identity_margin(m.lhs, m.rhs);
      r.inequality = "saturation";
      r.trace_distance = t;
      r.s = s;
      r.epsilon_kernel = kNaN;
      report.rows.push_back(std::move(r));
    }
  }
  report.summary = summarize(report.rows, tolerance, report.failure_count);
  report.kernels = std::string(kernels::active().name);
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace petz::harness
