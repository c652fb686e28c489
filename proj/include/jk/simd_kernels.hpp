#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace jk::simd {

/// Word-array kernels behind DenseSet. The scalar implementation is the
/// reference; vector variants must be bit-for-bit equivalent (the unit tests
/// enforce this on randomized inputs). All pointers may alias only as dst==a.
struct Kernels {
  const char* name;
  void (*bit_and)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  void (*bit_or)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  void (*bit_andnot)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);  // dst &= ~src
  bool (*equal)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  bool (*subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);    // a & ~b == 0
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t n);
};

const Kernels& scalar_kernels();
const Kernels* avx2_kernels();  // nullptr when the CPU or build lacks AVX2
const Kernels* neon_kernels();  // nullptr off aarch64

/// Kernel set used by DenseSet; defaults to the best supported variant.
const Kernels& active();

/// Force a variant by name ("auto", "scalar", "avx2", "neon").
/// Returns false (and changes nothing) if the variant is unavailable.
bool select(std::string_view name);

std::vector<const Kernels*> available();

}  // namespace jk::simd
