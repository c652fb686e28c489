// NEON variants of the DenseSet word kernels (aarch64 only; NEON is baseline
// there, so no runtime probe is needed beyond the compile-time guard).

#include "jk/simd_kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <bit>

namespace jk::simd {
namespace {

constexpr std::size_t kLanes = 2;  // 2 x u64 per 128-bit register

void v_and(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

void v_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

void v_andnot(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] &= ~src[i];
}

bool v_equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    uint64x2_t diff = veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vgetq_lane_u64(diff, 0) | vgetq_lane_u64(diff, 1)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool v_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    uint64x2_t stray = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vgetq_lane_u64(stray, 0) | vgetq_lane_u64(stray, 1)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::size_t v_popcount(const std::uint64_t* a, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    uint8x16_t cnt = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i)));
    total += vaddvq_u8(cnt);
  }
  for (; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

}  // namespace

const Kernels* neon_kernels_impl() {
  static const Kernels k{"neon", v_and, v_or, v_andnot, v_equal, v_subset, v_popcount};
  return &k;
}

}  // namespace jk::simd

#else

namespace jk::simd {
const Kernels* neon_kernels_impl() { return nullptr; }
}  // namespace jk::simd

#endif
