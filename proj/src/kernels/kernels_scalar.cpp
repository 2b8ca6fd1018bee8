#include "petz/kernels.hpp"
#include "kernels_internal.hpp"

#include <cmath>

namespace petz::kernels::scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += a[k] * b[k];
  return acc;
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += std::fabs(a[k] - b[k]);
  return acc;
}

double triangular_sum(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = a[k] + b[k];
    if (s > 0.0) {
      const double d = a[k] - b[k];
      acc += d * d / s;
    }
  }
  return acc;
}

cplx zdotc(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

void zgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[i * n + k].real(), ai = a[i * n + k].imag();
      const cplx* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real(), bi = brow[j].imag();
        crow[j] += cplx(ar * br - ai * bi, ar * bi + ai * br);
      }
    }
  }
}

void zmix(cplx* x, cplx* y, std::size_t n, cplx m00, cplx m01, cplx m10, cplx m11) {
  for (std::size_t k = 0; k < n; ++k) {
    const cplx xv = x[k], yv = y[k];
    x[k] = m00 * xv + m01 * yv;
    y[k] = m10 * xv + m11 * yv;
  }
}

}  // namespace petz::kernels::scalar
