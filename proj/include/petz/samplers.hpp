#pragma once

// Seedable, counter-based random instance generation.
//
// Every draw is a pure function of (seed, substream, counter), so a trial that
// owns substream k produces the same numbers regardless of which thread runs
// it or in what order. Gaussians use the Box-Muller transform of two uniforms.

#include <complex>
#include <cstdint>
#include <tuple>
#include <vector>

#include "petz/classical.hpp"
#include "petz/linalg.hpp"

namespace petz {

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t substream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t substream_id() const noexcept { return substream_; }

  /// Independent stream for the given id (e.g. one per trial index).
  RngStream substream(std::uint64_t id) const { return RngStream(seed_, id); }

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, bound); bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  double normal();
  /// E|z|^2 = 1, independent real and imaginary parts.
  std::complex<double> complex_normal();
  /// Exponential(1) variate.
  double exponential();

 private:
  std::uint64_t seed_;
  std::uint64_t substream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// G G^dagger / tr(G G^dagger) with G a dim x rank complex Gaussian matrix.
DensityMatrix random_density(std::size_t dim, std::size_t rank, RngStream& rng);

/// (A + A^dagger)/2 with A complex Gaussian.
Observable random_observable(std::size_t dim, RngStream& rng);

struct SaturatingTriple {
  DensityMatrix rho;
  DensityMatrix sigma;
  Observable theta;
};

/// Two-level family saturating the uncertainty relation. Matrices are written
/// in the ordered basis (|1>, |0>): rho = diag(e^{eps/2}, e^{-eps/2}) / (2 cosh(eps/2)),
/// sigma with the populations swapped, theta = diag(phi, -phi) = phi (|1><1| - |0><0|).
/// Throws DomainError for phi == 0.
SaturatingTriple saturating_pair(double epsilon, double phi);

Distribution random_distribution(std::size_t n, RngStream& rng);

/// Random pairing of {0..n-1}; for odd n one index is a fixed point.
Involution random_involution(std::size_t n, RngStream& rng);

std::vector<double> random_real_vector(std::size_t n, RngStream& rng);
std::vector<std::complex<double>> random_complex_vector(std::size_t n, RngStream& rng);

struct TrajectoryInstance {
  Distribution p;
  Involution reversal;
  /// theta(m(s)) = -theta(s); 0 at fixed points.
  std::vector<double> current;
};

TrajectoryInstance random_trajectory_instance(std::size_t n, RngStream& rng);

}  // namespace petz
