#include "petz/kernels.hpp"
#include "petz/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace petz {
namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary W = diag(1, e^{-i phi}) R(theta), where
// a(p,q) = |a(p,q)| e^{i phi}; A <- W^dagger A W, rows of vt hold eigenvectors.
void rotate(ComplexMatrix& a, ComplexMatrix& vt, std::size_t p, std::size_t q) {
  const std::size_t n = a.dim();
  const cplx b = a(p, q);
  const double mag = std::abs(b);
  if (mag == 0.0) return;
  const cplx phase = b / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const auto& k = kernels::active();
  cplx* row_p = a.data().data() + p * n;
  cplx* row_q = a.data().data() + q * n;
  k.zmix(row_p, row_q, n, c, -s * phase, s, c * phase);

  // the rotated matrix is Hermitian: columns p, q mirror rows p, q off the block
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    a(r, p) = std::conj(a(p, r));
    a(r, q) = std::conj(a(q, r));
  }
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  cplx* vp = vt.data().data() + p * n;
  cplx* vq = vt.data().data() + q * n;
  k.zmix(vp, vq, n, c, -s * std::conj(phase), s, c * std::conj(phase));
}

}  // namespace

std::vector<cplx> EigenDecomposition::vector(std::size_t k) const {
  std::vector<cplx> v(dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i] = vectors(i, k);
  return v;
}

ComplexMatrix EigenDecomposition::reconstruct(const std::function<double(double)>& f) const {
  const std::size_t n = dim();
  ComplexMatrix scaled = vectors;
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(values[k]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= fk;
  }
  return scaled * vectors.adjoint();
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  return reconstruct([](double x) { return x; });
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, const JacobiOptions& options) {
  const std::size_t n = m.dim();
  if (m.hermitian_defect() > options.hermitian_tol * std::max(1.0, m.max_abs())) {
    throw ValidationError(ValidationError::Kind::NotHermitian, "hermitian_eigen: input is not Hermitian");
  }
  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix vt = ComplexMatrix::identity(n);

  const double norm = a.frobenius_norm();
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= options.convergence * norm) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, vt, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a(src, src).real();
    cplx phase = 1.0;
    std::size_t lead = n;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx z = vt(src, i);
      if (std::abs(z) > 1e-12) {
        phase = std::conj(z) / std::abs(z);
        lead = i;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = vt(src, i) * phase;
    if (lead < n) out.vectors(lead, k) = std::abs(vt(src, lead));
  }
  return out;
}

}  // namespace petz
