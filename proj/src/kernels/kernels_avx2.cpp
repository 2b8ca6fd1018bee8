// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the runtime CPU check in dispatch.cpp.

#include "kernels_internal.hpp"

#include <immintrin.h>

#include <cmath>

namespace petz::kernels::avx2 {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Two interleaved complex numbers per register: [re0, im0, re1, im1].
inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// a * b where b is a complex broadcast [br, bi, br, bi]
inline __m256d cmul_bcast(__m256d a, __m256d b_re, __m256d b_im) {
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);  // [ai, ar, ...]
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4), acc1);
  }
  for (; k + 4 <= n; k += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) acc += a[k] * b[k];
  return acc;
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k));
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign, d));
  }
  double total = hsum(acc);
  for (; k < n; ++k) total += std::fabs(a[k] - b[k]);
  return total;
}

double triangular_sum(const double* a, const double* b, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d va = _mm256_loadu_pd(a + k), vb = _mm256_loadu_pd(b + k);
    const __m256d s = _mm256_add_pd(va, vb);
    const __m256d d = _mm256_sub_pd(va, vb);
    const __m256d mask = _mm256_cmp_pd(s, zero, _CMP_GT_OQ);
    // 0/0 lanes produce NaN; the mask zeroes them
    const __m256d q = _mm256_div_pd(_mm256_mul_pd(d, d), s);
    acc = _mm256_add_pd(acc, _mm256_and_pd(mask, q));
  }
  double total = hsum(acc);
  for (; k < n; ++k) {
    const double s = a[k] + b[k];
    if (s > 0.0) {
      const double d = a[k] - b[k];
      total += d * d / s;
    }
  }
  return total;
}

cplx zdotc(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = as_doubles(a);
  const double* pb = as_doubles(b);
  __m256d same = _mm256_setzero_pd();   // [ar*br, ai*bi, ...]
  __m256d cross = _mm256_setzero_pd();  // [ar*bi, ai*br, ...]
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * k);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
    same = _mm256_fmadd_pd(va, vb, same);
    cross = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), cross);
  }
  alignas(32) double s[4], c[4];
  _mm256_store_pd(s, same);
  _mm256_store_pd(c, cross);
  double re = (s[0] + s[2]) + (s[1] + s[3]);
  double im = (c[0] + c[2]) - (c[1] + c[3]);
  for (; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
  }
  return {re, im};
}

void zgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = as_doubles(c + i * n);
    for (std::size_t j = 0; j < 2 * n; ++j) crow[j] = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      const __m256d a_re = _mm256_set1_pd(aik.real());
      const __m256d a_im = _mm256_set1_pd(aik.imag());
      const double* brow = as_doubles(b + k * n);
      for (std::size_t p = 0; p < pairs; ++p) {
        const __m256d vb = _mm256_loadu_pd(brow + 4 * p);
        const __m256d prod = cmul_bcast(vb, a_re, a_im);
        _mm256_storeu_pd(crow + 4 * p, _mm256_add_pd(_mm256_loadu_pd(crow + 4 * p), prod));
      }
      if (n % 2 != 0) {
        const std::size_t j = n - 1;
        const double br = brow[2 * j], bi = brow[2 * j + 1];
        crow[2 * j] += aik.real() * br - aik.imag() * bi;
        crow[2 * j + 1] += aik.real() * bi + aik.imag() * br;
      }
    }
  }
}

void zmix(cplx* x, cplx* y, std::size_t n, cplx m00, cplx m01, cplx m10, cplx m11) {
  const __m256d r00 = _mm256_set1_pd(m00.real()), i00 = _mm256_set1_pd(m00.imag());
  const __m256d r01 = _mm256_set1_pd(m01.real()), i01 = _mm256_set1_pd(m01.imag());
  const __m256d r10 = _mm256_set1_pd(m10.real()), i10 = _mm256_set1_pd(m10.imag());
  const __m256d r11 = _mm256_set1_pd(m11.real()), i11 = _mm256_set1_pd(m11.imag());
  double* px = as_doubles(x);
  double* py = as_doubles(y);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * k);
    const __m256d vy = _mm256_loadu_pd(py + 2 * k);
    const __m256d nx = _mm256_add_pd(cmul_bcast(vx, r00, i00), cmul_bcast(vy, r01, i01));
    const __m256d ny = _mm256_add_pd(cmul_bcast(vx, r10, i10), cmul_bcast(vy, r11, i11));
    _mm256_storeu_pd(px + 2 * k, nx);
    _mm256_storeu_pd(py + 2 * k, ny);
  }
  for (; k < n; ++k) {
    const cplx xv = x[k], yv = y[k];
    x[k] = m00 * xv + m01 * yv;
    y[k] = m10 * xv + m11 * yv;
  }
}

}  // namespace petz::kernels::avx2
