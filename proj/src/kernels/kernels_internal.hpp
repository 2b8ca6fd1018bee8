#pragma once

#include "petz/kernels.hpp"

namespace petz::kernels::scalar {
double dot(const double* a, const double* b, std::size_t n);
double abs_diff_sum(const double* a, const double* b, std::size_t n);
double triangular_sum(const double* a, const double* b, std::size_t n);
cplx zdotc(const cplx* a, const cplx* b, std::size_t n);
void zgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void zmix(cplx* x, cplx* y, std::size_t n, cplx m00, cplx m01, cplx m10, cplx m11);
}  // namespace petz::kernels::scalar

namespace petz::kernels::avx2 {
double dot(const double* a, const double* b, std::size_t n);
double abs_diff_sum(const double* a, const double* b, std::size_t n);
double triangular_sum(const double* a, const double* b, std::size_t n);
cplx zdotc(const cplx* a, const cplx* b, std::size_t n);
void zgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void zmix(cplx* x, cplx* y, std::size_t n, cplx m00, cplx m01, cplx m10, cplx m11);
}  // namespace petz::kernels::avx2
