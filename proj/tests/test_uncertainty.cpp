#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "petz/bounds.hpp"
#include "petz/divergences.hpp"
#include "petz/nussbaum_szkola.hpp"
#include "petz/samplers.hpp"
#include "petz/uncertainty.hpp"

namespace {

using petz::ComplexMatrix;
using petz::DensityMatrix;
using petz::Distribution;
using petz::Observable;

constexpr double kTanhOne = 0.761594155955765;
const double kEpsilons[] = {0.1, 0.5, 1.0, 2.0, 3.0, 4.0};

DensityMatrix pure(std::vector<petz::cplx> v) { return petz::validate_density(ComplexMatrix::outer(v)); }

TEST(SStatistic, Examples) {
  petz::RngStream rng(71);
  const auto rho = petz::random_density(3, 3, rng);
  const auto sigma = petz::random_density(3, 3, rng);
  EXPECT_EQ(petz::s_statistic(rho, sigma, Observable(ComplexMatrix::identity(3))), 0.0);
  const auto tri = petz::saturating_pair(2.0, 1.0);
  EXPECT_NEAR(petz::s_statistic(tri.rho, tri.sigma, tri.theta), kTanhOne, 1e-14);
}

TEST(SStatistic, AgreesWithEmbeddingTraces) {
  petz::RngStream rng(72);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const auto rho = petz::random_density(n, 1 + rng.below(n), rng);
    const auto sigma = petz::random_density(n, 1 + rng.below(n), rng);
    const auto theta = petz::random_observable(n, rng);
    const auto t = petz::ns_moment_relations(rho, sigma, theta);
    petz::MomentSummary m;
    m.mean_rho = t.tr_rho_theta;
    m.mean_sigma = t.tr_sigma_theta;
    m.var_rho = std::max(0.0, t.tr_rho_theta_sq - t.tr_rho_theta * t.tr_rho_theta);
    m.var_sigma = std::max(0.0, t.tr_sigma_theta_sq - t.tr_sigma_theta * t.tr_sigma_theta);
    const double s = petz::s_statistic(rho, sigma, theta);
    EXPECT_GE(s, 0.0);
    EXPECT_LT(s, 1.0);
    EXPECT_NEAR(s, petz::s_from_moments(m), 1e-10);
  }
}

TEST(OmegaOperator, EqualStates) {
  petz::RngStream rng(73);
  const auto rho = petz::random_density(3, 3, rng);
  const auto om = petz::omega_operator(rho, rho);
  EXPECT_EQ(om.omega.matrix().max_abs(), 0.0);
  EXPECT_NEAR(om.epsilon, 1.0, 1e-12);
}

TEST(OmegaOperator, TwoLevelFamily) {
  const auto tri = petz::saturating_pair(2.0, 1.0);
  const auto om = petz::omega_operator(tri.rho, tri.sigma);
  EXPECT_NEAR(om.omega.matrix()(0, 0).real(), 1.0, 1e-14);
  EXPECT_NEAR(om.omega.matrix()(1, 1).real(), -1.0, 1e-14);
  EXPECT_NEAR(std::abs(om.omega.matrix()(0, 1)), 0.0, 1e-14);
  EXPECT_EQ(om.epsilon, 0.0);
}

TEST(OmegaOperator, PropertiesOnRandomPairs) {
  petz::RngStream rng(74);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const auto rho = petz::random_density(n, 1 + rng.below(n), rng);
    const auto sigma = petz::random_density(n, 1 + rng.below(n), rng);
    const auto om = petz::omega_operator(rho, sigma);
    const ComplexMatrix& w = om.omega.matrix();
    const ComplexMatrix w2 = w * w;
    // omega^2 + kernel projector = identity
    EXPECT_LT((w2 + om.kernel_projector - ComplexMatrix::identity(n)).max_abs(), 1e-12);
    const double mr = petz::expectation(rho, w), ms = petz::expectation(sigma, w);
    const double t = petz::trace_distance(rho, sigma);
    EXPECT_NEAR(mr - ms, 2.0 * t, 1e-10);
    EXPECT_NEAR(petz::expectation(rho, om.kernel_projector), petz::expectation(sigma, om.kernel_projector), 1e-10);
    EXPECT_NEAR(petz::expectation(rho, w2), 1.0 - om.epsilon, 1e-10);
    EXPECT_NEAR(petz::expectation(sigma, w2), 1.0 - om.epsilon, 1e-10);
    EXPECT_LE(2.0 * t * t, mr * mr + ms * ms + 1e-10);
    const auto spec = petz::hermitian_eigen(w).values;
    for (double v : spec) EXPECT_NEAR(std::min({std::fabs(v - 1.0), std::fabs(v), std::fabs(v + 1.0)}), 0.0, 1e-12);
  }
}

TEST(Theorem, EqualStatesZeroMargin) {
  petz::RngStream rng(75);
  const auto rho = petz::random_density(3, 3, rng);
  const auto m = petz::verify_theorem(rho, rho, petz::random_observable(3, rng), 2.0);
  EXPECT_NEAR(m.margin, 0.0, 1e-12);
}

TEST(Theorem, SaturatedByTwoLevelFamily) {
  for (double eps : kEpsilons) {
    for (double phi : {1.0, -0.3, 2.5}) {
      const auto tri = petz::saturating_pair(eps, phi);
      for (double alpha : petz::kDefaultAlphas) {
        EXPECT_NEAR(petz::verify_theorem(tri.rho, tri.sigma, tri.theta, alpha).margin, 0.0, 1e-9)
            << eps << " " << alpha;
      }
    }
  }
}

TEST(Theorem, ChainLinksHold) {
  petz::RngStream rng(76);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const auto rho = petz::random_density(n, 1 + rng.below(n), rng);
    const auto sigma = petz::random_density(n, 1 + rng.below(n), rng);
    const auto theta = petz::random_observable(n, rng);
    for (double alpha : petz::kDefaultAlphas) {
      const auto c = petz::theorem_chain(rho, sigma, theta, alpha);
      ASSERT_EQ(c.quantum.is_infinite(), c.classical.is_infinite());
      if (c.quantum.is_finite()) {
        EXPECT_NEAR(c.quantum.value(), c.classical.value(), 1e-9);
        EXPECT_GE(c.classical.value() - c.bound_sqrt_delta, -1e-9);
      }
      EXPECT_GE(c.sqrt_delta - c.s, -1e-10);
      EXPECT_GE(c.bound_sqrt_delta - c.bound_s, -1e-10);
    }
  }
}

TEST(GeneralizedHolevo, HalfOrderIsHolevoInequality) {
  petz::RngStream rng(77);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + rep % 4;
    const auto rho = petz::random_density(n, n, rng);
    const auto sigma = petz::random_density(n, n, rng);
    const auto h = petz::verify_generalized_holevo(rho, sigma, 0.5);
    EXPECT_NEAR(h.bound_via_trace.rhs, -std::log1p(-h.trace_distance * h.trace_distance), 1e-12);
    EXPECT_GE(h.bound_via_trace.margin, -1e-9);
    EXPECT_GE(h.s_vs_trace.margin, -1e-10);
  }
}

TEST(GeneralizedHolevo, OrthogonalPureStates) {
  const auto h = petz::verify_generalized_holevo(pure({1.0, 0.0}), pure({0.0, 1.0}), 2.0);
  EXPECT_NEAR(h.trace_distance, 1.0, 1e-15);
  EXPECT_TRUE(std::isinf(h.bound_via_trace.margin));
  EXPECT_GT(h.bound_via_trace.margin, 0.0);
}

TEST(InvertedUr, SaturatedAtOrderOne) {
  for (double eps : kEpsilons) {
    const auto tri = petz::saturating_pair(eps, 1.0);
    const auto m = petz::verify_inverted_ur(tri.rho, tri.sigma, tri.theta, 1.0);
    EXPECT_NEAR(m.lhs, 1.0 / std::pow(std::sinh(eps / 2.0), 2), 1e-8 * std::max(1.0, m.lhs));
    EXPECT_NEAR(m.margin, 0.0, 1e-8 * std::max(1.0, m.lhs)) << eps;
    ASSERT_TRUE(m.rhs_crosscheck.has_value());
    EXPECT_NEAR(*m.rhs_crosscheck, m.rhs, 1e-8 * std::max(1.0, m.rhs));
  }
}

TEST(InvertedUr, HalfOrderCrosscheckAndRandomMargins) {
  petz::RngStream rng(78);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const auto rho = petz::random_density(n, n, rng);
    const auto sigma = petz::random_density(n, n, rng);
    const auto theta = petz::random_observable(n, rng);
    const auto half = petz::verify_inverted_ur(rho, sigma, theta, 0.5);
    ASSERT_TRUE(half.rhs_crosscheck.has_value());
    EXPECT_NEAR(half.rhs, *half.rhs_crosscheck, 1e-9 * std::max(1.0, half.rhs));
    for (double alpha : petz::kDefaultAlphas)
      EXPECT_GE(petz::verify_inverted_ur(rho, sigma, theta, alpha).margin, -1e-9);
  }
}

TEST(InvertedUr, EqualMeansRejected) {
  petz::RngStream rng(79);
  const auto rho = petz::random_density(2, 2, rng);
  EXPECT_THROW(petz::verify_inverted_ur(rho, rho, petz::random_observable(2, rng), 1.0), petz::PreconditionError);
}

TEST(ClassicalTur, TwoPointSaturation) {
  for (double eps : kEpsilons) {
    const double a = 1.0 / (1.0 + std::exp(-eps));
    const Distribution p({a, 1.0 - a}), q({1.0 - a, a});
    const std::vector<double> theta{1.0, -1.0};
    const auto m = petz::verify_classical_turs(p, q, theta, 1.0);
    EXPECT_NEAR(m.margin, 0.0, 1e-8 * std::max(1.0, m.lhs)) << eps;
  }
}

TEST(ClassicalTur, RandomMarginsAndConstantObservable) {
  petz::RngStream rng(80);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 2 + rep % 7;
    const auto p = petz::random_distribution(n, rng);
    const auto q = petz::random_distribution(n, rng);
    const auto theta = petz::random_real_vector(n, rng);
    for (double alpha : petz::kDefaultAlphas) {
      const auto m = petz::verify_classical_turs(p, q, theta, alpha);
      EXPECT_GE(m.margin, -1e-9);
      if (m.rhs_crosscheck) {
        EXPECT_NEAR(m.rhs, *m.rhs_crosscheck, 1e-8 * std::max(1.0, m.rhs));
      }
    }
  }
  const Distribution p({0.6, 0.4}), q({0.2, 0.8});
  const std::vector<double> constant{3.0, 3.0};
  EXPECT_THROW(petz::verify_classical_turs(p, q, constant, 1.0), petz::PreconditionError);
}

TEST(ExchangeTur, TwoTrajectorySaturation) {
  for (double eps : kEpsilons) {
    const double a = 1.0 / (1.0 + std::exp(-eps));
    const Distribution p({a, 1.0 - a});
    const std::vector<double> theta{1.0, -1.0};
    const auto m = petz::verify_exchange_tur(p, petz::Involution({1, 0}), theta);
    EXPECT_NEAR(m.lhs, 1.0 / std::pow(std::sinh(eps / 2.0), 2), 1e-10 * m.lhs);
    EXPECT_NEAR(m.margin, 0.0, 1e-8 * std::max(1.0, m.lhs)) << eps;
  }
}

TEST(ExchangeTur, PreconditionsAndRandomSweep) {
  const std::vector<double> theta{1.0, -1.0};
  EXPECT_THROW(petz::verify_exchange_tur(Distribution({0.5, 0.5}), petz::Involution({1, 0}), theta),
               petz::PreconditionError);
  const std::vector<double> even{1.0, 1.0};
  EXPECT_THROW(petz::verify_exchange_tur(Distribution({0.6, 0.4}), petz::Involution({1, 0}), even),
               petz::PreconditionError);

  petz::RngStream rng(81);
  for (int rep = 0; rep < 500; ++rep) {
    const auto inst = petz::random_trajectory_instance(8, rng);
    EXPECT_GE(petz::verify_exchange_tur(inst.p, inst.reversal, inst.current).margin, -1e-9);
  }
}

TEST(Lemma1, RandomMargins) {
  petz::RngStream rng(82);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 2 + rep % 7;
    const auto p = petz::random_distribution(n, rng);
    const auto q = petz::random_distribution(n, rng);
    for (double alpha : petz::kDefaultAlphas) EXPECT_GE(petz::verify_lemma1(p, q, alpha).margin, -1e-9);
  }
}

TEST(CommutingReduction, QuantumAndClassicalVerifiersAgree) {
  petz::RngStream rng(83);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const auto p = petz::random_distribution(n, rng);
    const auto q = petz::random_distribution(n, rng);
    const auto theta = petz::random_real_vector(n, rng);
    const auto rho = petz::validate_density(ComplexMatrix::diagonal(p.weights()));
    const auto sigma = petz::validate_density(ComplexMatrix::diagonal(q.weights()));
    const Observable obs(ComplexMatrix::diagonal(theta));
    for (double alpha : petz::kDefaultAlphas) {
      const auto qt = petz::verify_theorem(rho, sigma, obs, alpha);
      const auto ct = petz::verify_classical_theorem(p, q, theta, alpha);
      EXPECT_NEAR(qt.margin, ct.margin, 1e-10);
      const auto qi = petz::verify_inverted_ur(rho, sigma, obs, alpha);
      const auto ci = petz::verify_classical_turs(p, q, theta, alpha);
      EXPECT_NEAR(qi.margin, ci.margin, 1e-10 * std::max(1.0, std::fabs(qi.lhs)));
    }
  }
}

}  // namespace
