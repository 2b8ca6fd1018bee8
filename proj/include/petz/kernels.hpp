#pragma once

// Arithmetic inner loops shared by the linear algebra and the classical
// reductions. Every kernel has a scalar reference implementation; SIMD
// variants are selected once at startup from the CPU feature set and can be
// overridden (PETZ_KERNELS=scalar|avx2, or select_backend()).
//
// Complex arrays are interleaved std::complex<double>; matrices are square and
// row-major.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace petz::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;

  // sum_k a[k] * b[k]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_k |a[k] - b[k]|
  double (*abs_diff_sum)(const double* a, const double* b, std::size_t n);
  // sum_k (a[k] - b[k])^2 / (a[k] + b[k]), terms with a[k] + b[k] == 0 contribute 0
  double (*triangular_sum)(const double* a, const double* b, std::size_t n);
  // sum_k conj(a[k]) * b[k]
  cplx (*zdotc)(const cplx* a, const cplx* b, std::size_t n);
  // c = a * b for n x n row-major matrices; c must not alias a or b
  void (*zgemm)(std::size_t n, const cplx* a, const cplx* b, cplx* c);
  // x' = m00 x + m01 y ; y' = m10 x + m11 y (in place, x and y disjoint)
  void (*zmix)(cplx* x, cplx* y, std::size_t n, cplx m00, cplx m01, cplx m10, cplx m11);
};

enum class Backend { Scalar, Avx2 };

const KernelTable& scalar_table() noexcept;

/// Returns nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_table() noexcept;

/// Backends usable on this machine, scalar first.
std::vector<Backend> available_backends();

/// Currently selected table. Thread-safe.
const KernelTable& active() noexcept;

/// Switches the active table; throws std::invalid_argument if unavailable.
void select_backend(Backend backend);

const KernelTable& table_for(Backend backend);

std::string_view backend_name(Backend backend) noexcept;

// Convenience wrappers over active().
inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline double abs_diff_sum(std::span<const double> a, std::span<const double> b) {
  return active().abs_diff_sum(a.data(), b.data(), a.size());
}
inline double triangular_sum(std::span<const double> a, std::span<const double> b) {
  return active().triangular_sum(a.data(), b.data(), a.size());
}
inline cplx zdotc(std::span<const cplx> a, std::span<const cplx> b) {
  return active().zdotc(a.data(), b.data(), a.size());
}

}  // namespace petz::kernels
