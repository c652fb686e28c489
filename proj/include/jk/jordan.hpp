#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "jk/finite_group.hpp"
#include "jk/subgroup_enum.hpp"

namespace jk {

/// Minimal index [G:A] over normal abelian subgroups A of g, with the largest
/// such A as witness (ties: lexicographically least member sequence).
struct NormalAbelianIndex {
  std::uint64_t index = 1;
  SubgroupSet witness;
};
NormalAbelianIndex min_normal_abelian_index(const GroupPtr& g, const Caps& caps = {});

/// Minimal index [G:A] over all abelian subgroups A (not necessarily normal).
/// Maximal abelian subgroups are self-centralizing, so a centralizer-descent
/// search (refine C to C ∩ C_G(x) for non-central x) visits every maximal
/// abelian subgroup without touching the full lattice; visited centralizer
/// sets are memoized and branches smaller than the best find are pruned.
struct AbelianIndex {
  std::uint64_t index = 1;
  SubgroupSet witness;  // first maximal-size abelian subgroup found
};
AbelianIndex min_abelian_index(const GroupPtr& g, const Caps& caps = {});

/// Exact Jordan analysis: J = max over subgroup-class representatives K of
/// min_normal_abelian_index(K), i.e. the least J such that every subgroup of
/// g has a normal abelian subgroup of index at most J.
struct AnalysisReport {
  std::uint64_t jordan_constant = 1;
  std::uint64_t bound_constant = 1;   // |g|: every subgroup trivially has order <= |g|
  SubgroupSet witness_subgroup;       // a K attaining the maximum
  SubgroupSet witness_abelian;        // its best normal abelian subgroup, in g's indices
  std::size_t subgroup_class_count = 0;
  std::chrono::nanoseconds elapsed{0};  // in-memory only; never serialized
};

/// `jobs` > 1 distributes the per-class work across threads; the reduction is
/// canonical (max index, then least witness member sequence), so results are
/// identical for every job count.
AnalysisReport jordan_constant(const GroupPtr& g, const Caps& caps = {}, unsigned jobs = 1);

/// Representatives of the isomorphism classes of simple nonabelian subgroups
/// of g (deduplicated across conjugacy classes via the isomorphism test),
/// ordered by (order, first representative's member sequence).
struct SimpleClass {
  GroupPtr group;
  SubgroupSet representative;
};
std::vector<SimpleClass> simple_nonabelian_classes(const GroupPtr& g, const Caps& caps = {});

}  // namespace jk
