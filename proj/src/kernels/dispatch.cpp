#include "petz/kernels.hpp"
#include "kernels_internal.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace petz::kernels {
namespace {

constexpr KernelTable kScalar{
    "scalar",
    &scalar::dot,
    &scalar::abs_diff_sum,
    &scalar::triangular_sum,
    &scalar::zdotc,
    &scalar::zgemm,
    &scalar::zmix,
};

#if defined(PETZ_HAVE_AVX2)
constexpr KernelTable kAvx2{
    "avx2",
    &avx2::dot,
    &avx2::abs_diff_sum,
    &avx2::triangular_sum,
    &avx2::zdotc,
    &avx2::zgemm,
    &avx2::zmix,
};

bool cpu_has_avx2() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable* initial_table() noexcept {
  const KernelTable* best = avx2_table();
  if (const char* env = std::getenv("PETZ_KERNELS")) {
    if (std::string(env) == "scalar") return &kScalar;
  }
  return best != nullptr ? best : &kScalar;
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(PETZ_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::Scalar};
  if (avx2_table() != nullptr) out.push_back(Backend::Avx2);
  return out;
}

const KernelTable& table_for(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return kScalar;
    case Backend::Avx2:
      if (const KernelTable* t = avx2_table()) return *t;
      throw std::invalid_argument("avx2 kernels are not available on this machine");
  }
  throw std::invalid_argument("unknown kernel backend");
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_acquire); }

void select_backend(Backend backend) { current().store(&table_for(backend), std::memory_order_release); }

std::string_view backend_name(Backend backend) noexcept {
  return backend == Backend::Scalar ? "scalar" : "avx2";
}

}  // namespace petz::kernels
