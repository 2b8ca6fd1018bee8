#include "petz/nussbaum_szkola.hpp"

#include <algorithm>
#include <numeric>

#include "petz/divergences.hpp"
#include "petz/kernels.hpp"

namespace petz {
namespace {

struct OrderedBasis {
  std::vector<double> values;
  std::vector<std::vector<cplx>> vectors;
};

// Descending eigenvalue order: the ascending decomposition read backwards.
OrderedBasis descending(const DensityMatrix& m) {
  const EigenDecomposition& spec = m.spectrum();
  const std::size_t n = spec.dim();
  OrderedBasis out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k = n; k-- > 0;) {
    out.values.push_back(spec.values[k]);
    out.vectors.push_back(spec.vector(k));
  }
  return out;
}

std::vector<cplx> apply(const ComplexMatrix& a, const std::vector<cplx>& v) {
  const std::size_t n = a.dim();
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace

NsEmbedding ns_embed(const DensityMatrix& rho, const DensityMatrix& sigma, const std::optional<Observable>& theta) {
  require_same_dim(rho.dim(), sigma.dim(), "ns_embed");
  if (theta) require_same_dim(rho.dim(), theta->dim(), "ns_embed");
  const std::size_t n = rho.dim();
  const OrderedBasis pb = descending(rho);
  const OrderedBasis qb = descending(sigma);

  std::vector<std::vector<cplx>> theta_q;
  if (theta) {
    theta_q.reserve(n);
    for (const auto& v : qb.vectors) theta_q.push_back(apply(theta->matrix(), v));
  }

  std::vector<double> pw(n * n, 0.0), qw(n * n, 0.0);
  std::vector<cplx> tw(theta ? n * n : 0, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx overlap = kernels::zdotc(pb.vectors[i], qb.vectors[j]);
      const double weight = std::norm(overlap);
      if (weight <= kNsOverlapCutoff) continue;
      const std::size_t k = i * n + j;
      pw[k] = pb.values[i] * weight;
      qw[k] = qb.values[j] * weight;
      if (theta) tw[k] = kernels::zdotc(pb.vectors[i], theta_q[j]) / overlap;
    }
  }

  NsEmbedding out;
  out.dim = n;
  out.p = Distribution(std::move(pw), 1e-9);
  out.q = Distribution(std::move(qw), 1e-9);
  out.theta = std::move(tw);
  out.rho_eigenvalues = pb.values;
  out.sigma_eigenvalues = qb.values;
  return out;
}

DivergencePair ns_divergence_identity(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  const NsEmbedding e = ns_embed(rho, sigma);
  DivergencePair out;
  out.classical = classical_renyi(e.p, e.q, alpha);
  out.quantum = alpha == 1.0 ? quantum_relative_entropy(rho, sigma) : petz_renyi(rho, sigma, alpha);
  return out;
}

NsMoments ns_moment_relations(const DensityMatrix& rho, const DensityMatrix& sigma, const Observable& theta) {
  const NsEmbedding e = ns_embed(rho, sigma, theta);
  NsMoments m;
  m.mean_p = e.p.mean(e.theta);
  m.mean_q = e.q.mean(e.theta);
  for (std::size_t k = 0; k < e.theta.size(); ++k) {
    const double a = std::norm(e.theta[k]);
    m.second_p += e.p[k] * a;
    m.second_q += e.q[k] * a;
  }
  const ComplexMatrix theta_sq = theta.matrix() * theta.matrix();
  m.tr_rho_theta = expectation(rho, theta.matrix());
  m.tr_sigma_theta = expectation(sigma, theta.matrix());
  m.tr_rho_theta_sq = expectation(rho, theta_sq.hermitian_part());
  m.tr_sigma_theta_sq = expectation(sigma, theta_sq.hermitian_part());
  return m;
}

}  // namespace petz
