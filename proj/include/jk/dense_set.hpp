#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "jk/simd_kernels.hpp"

namespace jk {

/// Fixed-universe bitset for element sets (universe = group order). The bulk
/// operations route through the runtime-selected word kernels.
class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static DenseSet from_members(std::size_t universe, std::span<const std::uint32_t> members) {
    DenseSet s(universe);
    for (auto m : members) s.set(m);
    return s;
  }

  std::size_t universe() const { return universe_; }
  bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { words_.assign(words_.size(), 0); }

  DenseSet& operator&=(const DenseSet& o) {
    simd::active().bit_and(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  DenseSet& operator|=(const DenseSet& o) {
    simd::active().bit_or(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  /// Removes o's members: *this &= ~o.
  DenseSet& subtract(const DenseSet& o) {
    simd::active().bit_andnot(words_.data(), o.words_.data(), words_.size());
    return *this;
  }

  bool operator==(const DenseSet& o) const {
    return simd::active().equal(words_.data(), o.words_.data(), words_.size());
  }
  bool subset_of(const DenseSet& o) const {
    return simd::active().subset(words_.data(), o.words_.data(), words_.size());
  }
  std::size_t count() const { return simd::active().popcount(words_.data(), words_.size()); }

  /// Members in increasing order.
  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  struct Hash {
    std::size_t operator()(const DenseSet& s) const {
      std::uint64_t h = 1469598103934665603ull;
      for (auto w : s.words_) {
        h ^= w;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace jk
