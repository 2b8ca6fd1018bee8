#include "petz/samplers.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace petz {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t substream)
    : seed_(seed), substream_(substream), key_(mix64(seed ^ mix64(substream * kGolden + 0x632BE59BD9B4E019ULL))) {}

std::uint64_t RngStream::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

double RngStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t RngStream::below(std::uint64_t bound) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(next_u64()) * bound) >> 64);
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

std::complex<double> RngStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

double RngStream::exponential() { return -std::log(1.0 - uniform()); }

DensityMatrix random_density(std::size_t dim, std::size_t rank, RngStream& rng) {
  if (dim == 0 || rank == 0 || rank > dim) {
    throw ValidationError(ValidationError::Kind::Shape, "random_density: need 1 <= rank <= dim");
  }
  std::vector<cplx> g(dim * rank);
  for (cplx& z : g) z = rng.complex_normal();
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < rank; ++k) acc += g[i * rank + k] * std::conj(g[j * rank + k]);
      m(i, j) = acc;
    }
  const double tr = m.trace().real();
  m *= 1.0 / tr;
  return validate_density(m.hermitian_part());
}

Observable random_observable(std::size_t dim, RngStream& rng) {
  if (dim == 0) throw ValidationError(ValidationError::Kind::Shape, "random_observable: dim must be >= 1");
  ComplexMatrix a(dim);
  for (cplx& z : a.data()) z = rng.complex_normal();
  return Observable((a + a.adjoint()) * 0.5);
}

SaturatingTriple saturating_pair(double epsilon, double phi) {
  if (phi == 0.0) throw DomainError("saturating_pair: phi must be nonzero");
  const double z = 2.0 * std::cosh(0.5 * epsilon);
  const double hi = std::exp(0.5 * epsilon) / z;
  const double lo = std::exp(-0.5 * epsilon) / z;
  const double rho_diag[] = {hi, lo};
  const double sigma_diag[] = {lo, hi};
  const double theta_diag[] = {phi, -phi};
  return SaturatingTriple{validate_density(ComplexMatrix::diagonal(rho_diag)),
                          validate_density(ComplexMatrix::diagonal(sigma_diag)),
                          Observable(ComplexMatrix::diagonal(theta_diag))};
}

Distribution random_distribution(std::size_t n, RngStream& rng) {
  if (n == 0) throw ValidationError(ValidationError::Kind::Shape, "random_distribution: n must be >= 1");
  std::vector<double> w(n);
  for (double& x : w) x = rng.exponential();
  return Distribution::normalized(std::move(w));
}

Involution random_involution(std::size_t n, RngStream& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    map[perm[k]] = perm[k + 1];
    map[perm[k + 1]] = perm[k];
  }
  return Involution(std::move(map));
}

std::vector<double> random_real_vector(std::size_t n, RngStream& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.normal();
  return v;
}

std::vector<std::complex<double>> random_complex_vector(std::size_t n, RngStream& rng) {
  std::vector<std::complex<double>> v(n);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

TrajectoryInstance random_trajectory_instance(std::size_t n, RngStream& rng) {
  Distribution p = random_distribution(n, rng);
  Involution m = random_involution(n, rng);
  std::vector<double> current(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    if (m(s) > s) {
      current[s] = rng.normal();
      current[m(s)] = -current[s];
    }
  }
  return {std::move(p), std::move(m), std::move(current)};
}

}  // namespace petz
