#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jk {

/// Permutation of {0, ..., degree-1}, stored as its image vector.
/// Composition is right-to-left: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(std::uint32_t degree);

  /// Validates that `images` is a bijection; ErrKind::invalid_parameter otherwise.
  static Permutation from_images(std::vector<std::uint32_t> images);

  /// Builds from disjoint-or-not cycles over {0,...,degree-1}; entries are
  /// applied left to right, so overlapping cycles compose like a product.
  /// Out-of-range or repeated-in-one-cycle entries are invalid_parameter.
  static Permutation from_cycles(std::uint32_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;  // degree_mismatch if degrees differ
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& o) const = default;
  /// Lexicographic order on image vectors; the identity is least.
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  /// Disjoint-cycle notation, fixed points omitted; "()" for the identity.
  std::string cycle_string() const;

  struct Hash {
    std::size_t operator()(const Permutation& p) const {
      std::uint64_t h = 1469598103934665603ull;
      for (auto v : p.images_) {
        h ^= v;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  std::vector<std::uint32_t> images_;
};

/// Parses cycle notation like "(0 1 2)(3 4)" or "()"; accepts commas or
/// spaces between points. ErrKind::parse_error on malformed input.
std::vector<std::vector<std::uint32_t>> parse_cycles(const std::string& text);

}  // namespace jk
