#include "simd/kernels_impl.hpp"

#include <cstdlib>
#include <string_view>

namespace obslab::simd {

namespace {

bool cpu_has_avx2() {
#if OBSLAB_HAVE_AVX2 && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() {
  const char* forced = std::getenv("OBSLAB_KERNELS");
  if (forced != nullptr && std::string_view(forced) == "scalar") return detail::scalar_table();
  if (const KernelTable* t = avx2_kernels()) return *t;
  return detail::scalar_table();
}

}  // namespace

const KernelTable& scalar_kernels() { return detail::scalar_table(); }

const KernelTable* avx2_kernels() {
#if OBSLAB_HAVE_AVX2
  static const bool ok = cpu_has_avx2();
  return ok ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& kernels() {
  static const KernelTable& active = select();
  return active;
}

}  // namespace obslab::simd
