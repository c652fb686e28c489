#pragma once

#include <cstddef>
#include <cstdint>

namespace jk {

/// Resource limits for the exact-computation engine. Exceeding any of them
/// raises ErrKind::cap_exceeded; nothing is ever silently truncated.
struct Caps {
  /// Maximum group order a generator closure may reach.
  std::size_t closure_cap = 10000;
  /// Orders up to this get all |G|^3 associativity triples checked; larger
  /// tables get `sampled_triples` seeded random triples instead.
  std::size_t full_validation_cap = 512;
  std::size_t sampled_triples = 100000;
  /// Maximum order for full subgroup-lattice enumeration.
  std::size_t lattice_cap = 1024;
  /// Maximum order for normal-subgroup enumeration (used by alpha).
  std::size_t normal_lattice_cap = 10000;
  /// Maximum |H| for automorphism-group construction.
  std::size_t automorphism_cap = 128;
  /// Node budget shared by the isomorphism / automorphism backtracking
  /// searches; generous enough that it cannot trip for orders <= 512 unless
  /// the automorphism group itself is huge (e.g. GL(6,2)).
  std::size_t search_budget = 200000000;
  /// Seed for all sampled randomness (associativity sampling past the full
  /// validation cap). Fixed default keeps every run reproducible.
  std::uint64_t seed = 1729;

  /// Defaults with the JORDAN_KIT_CAP environment override applied to
  /// closure_cap (used by the CLI entry points).
  static Caps from_env();
};

}  // namespace jk
