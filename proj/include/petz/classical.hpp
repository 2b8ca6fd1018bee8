#pragma once

// Classical distributions, Renyi divergences, triangular discrimination,
// total variation, and the involution / entropy-variable framework.

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "petz/extended_real.hpp"
#include "petz/errors.hpp"

namespace petz {

/// Nonnegative weights summing to one.
class Distribution {
 public:
  Distribution() = default;
  /// Validates nonnegativity, finiteness and |sum - 1| <= tol, then renormalizes exactly.
  explicit Distribution(std::vector<double> weights, double tol = 1e-12);

  /// Normalizes arbitrary nonnegative weights (sum must be positive).
  static Distribution normalized(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double operator[](std::size_t s) const { return weights_[s]; }
  bool in_support(std::size_t s) const { return weights_[s] > 0.0; }
  std::vector<bool> support() const;

  /// sum_s P(s) x(s)
  double mean(std::span<const double> x) const;
  std::complex<double> mean(std::span<const std::complex<double>> x) const;

 private:
  std::vector<double> weights_;
};

/// Self-inverse permutation of {0, ..., n-1}.
class Involution {
 public:
  Involution() = default;
  /// Throws ValidationError(NotInvolution) unless m(m(s)) == s for all s.
  explicit Involution(std::vector<std::size_t> mapping);

  /// The bit flip (s, i) -> (s, 1-i) on a 2n index set laid out as [first half | second half].
  static Involution half_swap(std::size_t n);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator()(std::size_t s) const { return map_[s]; }
  std::span<const std::size_t> mapping() const noexcept { return map_; }

 private:
  std::vector<std::size_t> map_;
};

/// P o m, i.e. s -> P(m(s)).
Distribution compose(const Distribution& p, const Involution& m);

/// Sigma(s) = ln P(s)/P(m(s)) where both are positive, 0 otherwise.
struct EntropyVariable {
  std::vector<double> values;
  Distribution source;
  Involution involution;
};

EntropyVariable entropy_variable(const Distribution& p, const Involution& m);

/// True when P(s) > 0 exactly when P(m(s)) > 0.
bool mutually_continuous(const Distribution& p, const Involution& m);

/// sum_s P_s^alpha Q_s^(1-alpha) restricted to the terms that can be nonzero;
/// +infinity for alpha > 1 when some P_s > 0 has Q_s = 0.
ExtendedReal renyi_overlap(const Distribution& p, const Distribution& q, double alpha);

/// (1/(alpha-1)) ln sum_s P_s^alpha Q_s^(1-alpha); alpha == 1 gives the KL divergence.
ExtendedReal classical_renyi(const Distribution& p, const Distribution& q, double alpha);

/// sum_s P_s ln(P_s / Q_s), +infinity when P is not absolutely continuous w.r.t. Q.
ExtendedReal kl_divergence(const Distribution& p, const Distribution& q);

/// (1/2)(D_alpha(P|Q) + D_alpha(Q|P)); infinity propagates.
ExtendedReal symmetric_classical_renyi(const Distribution& p, const Distribution& q, double alpha);

/// Triangular discrimination, halved convention: sum_s (P_s - Q_s)^2 / (2 (P_s + Q_s)), in [0, 1].
double triangular_discrimination(const Distribution& p, const Distribution& q);

/// (1/2) sum_s |P_s - Q_s|
double total_variation(const Distribution& p, const Distribution& q);

/// <tanh(Sigma/2)^2>_P
double mean_tanh_half_squared(const EntropyVariable& sigma);

/// p(s, 1) = P(s)/2 at index s, p(s, 0) = Q(s)/2 at index n + s, with the half swap involution.
std::pair<Distribution, Involution> pair_construction(const Distribution& p, const Distribution& q);

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual() const { return lhs - rhs; }
};

/// lhs = <exp((alpha-1) Sigma)>_P, rhs = <cosh((alpha-1/2) Sigma) / cosh(Sigma/2)>_P.
IdentitySides exp_moment_identity_check(const Distribution& p, const Involution& m, double alpha);

/// Both sides of the Jensen step: lhs = <F(Sigma)>_P and
/// rhs = F(2 artanh sqrt(<tanh^2(Sigma/2)>)), F(x) = cosh((alpha-1/2)x)/cosh(x/2).
/// lhs >= rhs for alpha > 1 and lhs <= rhs for alpha < 1.
IdentitySides jensen_sides(const Distribution& p, const Involution& m, double alpha);

/// lhs = delta(P, Q); rhs = (1/2)|dm|^2 / (<<Theta>>_P + <<Theta>>_Q + (1/2)|dm|^2),
/// with <<Theta>> = <|Theta|^2> - |<Theta>|^2 and dm = <Theta>_P - <Theta>_Q. rhs is 0 on a 0/0.
IdentitySides lemma2_bound(const Distribution& p, const Distribution& q, std::span<const std::complex<double>> theta);

}  // namespace petz
