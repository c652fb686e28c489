#pragma once

#include <cstdint>
#include <vector>

#include "jk/finite_group.hpp"

namespace jk {

/// One conjugacy class of subgroups. The representative is the class member
/// whose sorted member sequence is lexicographically least, so repeated runs
/// agree exactly.
struct SubgroupClass {
  SubgroupSet representative;
  std::size_t class_size = 0;  // number of conjugate subgroups; 1 means normal
  bool normal = false;
  bool abelian = false;
};

/// Complete subgroup lattice up to conjugacy. Seeds with every cyclic
/// subgroup, then repeatedly joins class representatives with cyclic
/// subgroups until no new class appears; every conjugate of every discovered
/// subgroup is hashed, so conjugacy deduplication is exact. Classes are
/// returned sorted by (subgroup order, member sequence).
/// Requires |g| <= caps.lattice_cap.
std::vector<SubgroupClass> enumerate_subgroup_classes(const GroupPtr& g, const Caps& caps = {});

/// All normal subgroups, sorted by (order, member sequence). Works from
/// normal closures of cyclic subgroups (one per element conjugacy class) and
/// closes under joins — the product set N*M is already the join of two normal
/// subgroups — so it stays feasible well past the full-lattice cap.
/// Requires |g| <= caps.normal_lattice_cap.
std::vector<SubgroupSet> enumerate_normal_subgroups(const GroupPtr& g, const Caps& caps = {});

/// Element conjugacy classes, each sorted, ordered by least member.
std::vector<std::vector<Elem>> element_conjugacy_classes(const FiniteGroup& g);

/// Normalizer of the subgroup set s in g.
SubgroupSet normalizer_of(const GroupPtr& g, const SubgroupSet& s);

}  // namespace jk
