#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jk/finite_group.hpp"

namespace jk {

/// Standard families. Parameters are validated (typed invalid_parameter);
/// sizes run into the closure cap like any other construction.
GroupPtr symmetric_group(std::uint32_t n, const Caps& caps = {});
GroupPtr alternating_group(std::uint32_t n, const Caps& caps = {});
GroupPtr cyclic_group(std::uint32_t n, const Caps& caps = {});
/// Parameter is the group ORDER (dihedral(8) has 8 elements).
GroupPtr dihedral_group(std::uint32_t order, const Caps& caps = {});
/// Generalized quaternion / dicyclic of the given order (divisible by 4,
/// at least 8); quaternion(8) is Q8.
GroupPtr quaternion_group(std::uint32_t order, const Caps& caps = {});
/// Direct sum of Z/d_i for the invariant-factor chain d_1 | d_2 | ... (each
/// >= 2). The empty chain is the trivial group.
GroupPtr abelian_group(const std::vector<std::uint32_t>& invariant_factors, const Caps& caps = {});
/// SL_2(F_5), the binary icosahedral group, via its standard two matrix
/// generators.
GroupPtr binary_icosahedral_group(const Caps& caps = {});

/// Central extension mu_n x K x K^ for K = (+) Z/d_i with invariant factors
/// d_1 | ... | d_r, n = |K|, m = d_r = exp(K):
///   (e, g, a) * (e', g', a') = (e + e' + (n/m) <a', g>, g + g', a + a')
/// with the pairing <a, g> = sum_i a_i g_i (m / d_i) mod m. Element (e,g,a)
/// has index (e*n + idx(g))*n + idx(a) in mixed radix; the identity is 0.
GroupPtr zarhin_group(const std::vector<std::uint32_t>& invariant_factors, const Caps& caps = {});

/// One description a group can be built from (and serialized back to).
struct GroupSpec {
  enum class Kind { family, permutation_generators, matrix_generators, cayley_table };
  Kind kind = Kind::family;

  // Kind::family
  std::string family;                  // symmetric, alternating, cyclic, dihedral,
                                       // quaternion, abelian, binary_icosahedral, zarhin
  std::vector<std::uint32_t> params;   // single n, or the invariant-factor chain

  // Kind::permutation_generators
  std::uint32_t degree = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> perm_generators;  // cycles

  // Kind::matrix_generators
  std::uint32_t dim = 0;
  std::uint32_t prime = 0;
  std::vector<std::vector<std::uint32_t>> mat_generators;  // row-major entries

  // Kind::cayley_table
  std::uint32_t order = 0;
  std::vector<Elem> table;
  std::vector<std::string> labels;

  static GroupSpec for_family(std::string family, std::vector<std::uint32_t> params);

  /// Short human-readable form, e.g. "symmetric(5)" or "cayley(order=8)".
  std::string summary() const;
};

/// Builds the described group. Unknown family names are ErrKind::unknown_family.
GroupPtr from_spec(const GroupSpec& spec, const Caps& caps = {});

}  // namespace jk
