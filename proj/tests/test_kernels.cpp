#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "petz/divergences.hpp"
#include "petz/kernels.hpp"
#include "petz/samplers.hpp"

namespace {

using petz::kernels::Backend;
using petz::kernels::cplx;

std::vector<double> reals(std::size_t n, petz::RngStream& rng, bool nonneg) {
  std::vector<double> v(n);
  for (auto& x : v) x = nonneg ? rng.exponential() : rng.normal();
  return v;
}

std::vector<cplx> complexes(std::size_t n, petz::RngStream& rng) {
  std::vector<cplx> v(n);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

double scale_of(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i]) + std::fabs(b[i]);
  return s;
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (petz::kernels::avx2_table() == nullptr) GTEST_SKIP() << "AVX2 kernels not available on this CPU";
    ref = &petz::kernels::scalar_table();
    simd = petz::kernels::avx2_table();
  }
  const petz::kernels::KernelTable* ref = nullptr;
  const petz::kernels::KernelTable* simd = nullptr;
};

TEST_F(KernelEquivalence, RealReductionsMatchScalar) {
  petz::RngStream rng(11);
  for (std::size_t n = 0; n <= 41; ++n) {
    const auto a = reals(n, rng, false);
    const auto b = reals(n, rng, false);
    const double tol = 1e-14 * scale_of(a, b) * scale_of(a, b);
    EXPECT_NEAR(ref->dot(a.data(), b.data(), n), simd->dot(a.data(), b.data(), n), tol) << "n=" << n;
    EXPECT_NEAR(ref->abs_diff_sum(a.data(), b.data(), n), simd->abs_diff_sum(a.data(), b.data(), n), tol)
        << "n=" << n;
  }
}

TEST_F(KernelEquivalence, TriangularSumMatchesScalarWithZeroPairs) {
  petz::RngStream rng(12);
  for (std::size_t n = 0; n <= 41; ++n) {
    auto a = reals(n, rng, true);
    auto b = reals(n, rng, true);
    for (std::size_t k = 0; k < n; k += 3) a[k] = b[k] = 0.0;  // 0/0 lanes
    for (std::size_t k = 1; k < n; k += 5) a[k] = 0.0;
    const double r = ref->triangular_sum(a.data(), b.data(), n);
    const double s = simd->triangular_sum(a.data(), b.data(), n);
    ASSERT_TRUE(std::isfinite(s));
    EXPECT_NEAR(r, s, 1e-13 * (1.0 + std::fabs(r))) << "n=" << n;
  }
}

TEST_F(KernelEquivalence, ComplexDotMatchesScalar) {
  petz::RngStream rng(13);
  for (std::size_t n = 0; n <= 41; ++n) {
    const auto a = complexes(n, rng);
    const auto b = complexes(n, rng);
    const cplx r = ref->zdotc(a.data(), b.data(), n);
    const cplx s = simd->zdotc(a.data(), b.data(), n);
    EXPECT_NEAR(std::abs(r - s), 0.0, 1e-13 * (1.0 + n)) << "n=" << n;
  }
}

TEST_F(KernelEquivalence, ComplexGemmMatchesScalar) {
  petz::RngStream rng(14);
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto a = complexes(n * n, rng);
    const auto b = complexes(n * n, rng);
    std::vector<cplx> c1(n * n), c2(n * n);
    ref->zgemm(n, a.data(), b.data(), c1.data());
    simd->zgemm(n, a.data(), b.data(), c2.data());
    for (std::size_t k = 0; k < n * n; ++k) EXPECT_NEAR(std::abs(c1[k] - c2[k]), 0.0, 1e-13 * n) << "n=" << n;
  }
}

TEST_F(KernelEquivalence, RowMixMatchesScalar) {
  petz::RngStream rng(15);
  for (std::size_t n = 0; n <= 13; ++n) {
    auto x1 = complexes(n, rng);
    auto y1 = complexes(n, rng);
    auto x2 = x1;
    auto y2 = y1;
    const cplx m00 = rng.complex_normal(), m01 = rng.complex_normal();
    const cplx m10 = rng.complex_normal(), m11 = rng.complex_normal();
    ref->zmix(x1.data(), y1.data(), n, m00, m01, m10, m11);
    simd->zmix(x2.data(), y2.data(), n, m00, m01, m10, m11);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(std::abs(x1[k] - x2[k]), 0.0, 1e-13);
      EXPECT_NEAR(std::abs(y1[k] - y2[k]), 0.0, 1e-13);
    }
  }
}

TEST_F(KernelEquivalence, DivergencesAgreeAcrossBackends) {
  petz::RngStream rng(16);
  const Backend original = petz::kernels::active().name == "avx2" ? Backend::Avx2 : Backend::Scalar;
  for (std::size_t dim = 2; dim <= 6; ++dim) {
    const auto rho = petz::random_density(dim, dim, rng);
    const auto sigma = petz::random_density(dim, dim, rng);
    for (double alpha : petz::kDefaultAlphas) {
      petz::kernels::select_backend(Backend::Scalar);
      const double a = petz::symmetric_petz_renyi(rho, sigma, alpha).value();
      petz::kernels::select_backend(Backend::Avx2);
      const double b = petz::symmetric_petz_renyi(rho, sigma, alpha).value();
      EXPECT_NEAR(a, b, 1e-12) << "dim=" << dim << " alpha=" << alpha;
    }
  }
  petz::kernels::select_backend(original);
}

TEST(KernelDispatch, ScalarAlwaysAvailable) {
  const auto backends = petz::kernels::available_backends();
  ASSERT_FALSE(backends.empty());
  EXPECT_EQ(backends.front(), Backend::Scalar);
  EXPECT_EQ(petz::kernels::backend_name(Backend::Scalar), "scalar");
}

TEST(KernelDispatch, SelectRoundTrips) {
  const std::string before(petz::kernels::active().name);
  petz::kernels::select_backend(Backend::Scalar);
  EXPECT_EQ(petz::kernels::active().name, "scalar");
  for (Backend b : petz::kernels::available_backends()) {
    petz::kernels::select_backend(b);
    EXPECT_EQ(petz::kernels::active().name, petz::kernels::backend_name(b));
  }
  if (before == "avx2") petz::kernels::select_backend(Backend::Avx2);
}

TEST(KernelSpans, EmptyInputsGiveZero) {
  const std::vector<double> e;
  EXPECT_EQ(petz::kernels::dot(e, e), 0.0);
  EXPECT_EQ(petz::kernels::triangular_sum(e, e), 0.0);
}

}  // namespace
