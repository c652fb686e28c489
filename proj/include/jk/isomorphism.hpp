#pragma once

#include <optional>
#include <vector>

#include "jk/finite_group.hpp"
#include "jk/permutation.hpp"

namespace jk {

struct IsoResult {
  bool isomorphic = false;
  std::optional<GroupHomomorphism> witness;  // a concrete isomorphism when found
};

/// Exact isomorphism test by generator-image backtracking. Generators of g1
/// are chosen greedily to minimize the branching factor; candidate images are
/// filtered by (element order, centralizer size); each tentative assignment
/// propagates through an incremental closure of the partial map, aborting on
/// the first conflict. Search work is bounded by caps.search_budget
/// (ErrKind::cap_exceeded when exhausted).
IsoResult are_isomorphic(const GroupPtr& g1, const GroupPtr& g2, const Caps& caps = {});

/// Aut(h) as a concrete group: elements are all automorphisms (permutations
/// of h's element indices) sorted lexicographically by image vector — the
/// identity automorphism is element 0 — with composition as the product.
/// Requires |h| <= caps.automorphism_cap.
struct AutomorphismGroup {
  GroupPtr group;
  std::vector<Permutation> automorphisms;  // element i of `group` is automorphisms[i]
};
AutomorphismGroup automorphism_group(const GroupPtr& h, const Caps& caps = {});

}  // namespace jk
