#include <atomic>

#include "jk/simd_kernels.hpp"

namespace jk::simd {

// Implemented in the per-ISA translation units.
const Kernels* avx2_kernels_impl();
const Kernels* neon_kernels_impl();

const Kernels* avx2_kernels() {
#if defined(__x86_64__) || defined(__i386__)
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  return avx2_kernels_impl();
#else
  return nullptr;
#endif
}

const Kernels* neon_kernels() { return neon_kernels_impl(); }

namespace {

const Kernels* best() {
  if (const Kernels* k = avx2_kernels()) return k;
  if (const Kernels* k = neon_kernels()) return k;
  return &scalar_kernels();
}

std::atomic<const Kernels*>& slot() {
  static std::atomic<const Kernels*> s{best()};
  return s;
}

}  // namespace

const Kernels& active() { return *slot().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
  const Kernels* k = nullptr;
  if (name == "auto")
    k = best();
  else if (name == "scalar")
    k = &scalar_kernels();
  else if (name == "avx2")
    k = avx2_kernels();
  else if (name == "neon")
    k = neon_kernels();
  if (!k) return false;
  slot().store(k, std::memory_order_relaxed);
  return true;
}

std::vector<const Kernels*> available() {
  std::vector<const Kernels*> out{&scalar_kernels()};
  if (const Kernels* k = avx2_kernels()) out.push_back(k);
  if (const Kernels* k = neon_kernels()) out.push_back(k);
  return out;
}

}  // namespace jk::simd
