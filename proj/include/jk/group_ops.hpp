#pragma once

#include <cstdint>
#include <vector>

#include "jk/finite_group.hpp"
#include "jk/permutation.hpp"

namespace jk {

/// Closes a permutation generating set into a FiniteGroup. Element order is
/// canonical: breadth-first from the identity, generators applied in input
/// order, each new BFS level sorted lexicographically by image vector — so
/// the identity is always element 0 and repeated runs agree byte-for-byte.
/// ErrKind::cap_exceeded if the closure passes caps.closure_cap.
GroupPtr close_generators(std::uint32_t degree, const std::vector<Permutation>& generators,
                          const Caps& caps = {});

/// Same closure over dim x dim matrices with entries mod a prime p.
/// Generators must be invertible mod p; p must be prime.
GroupPtr matrix_group_over_prime_field(std::uint32_t dim, std::uint32_t p,
                                       const std::vector<std::vector<std::uint32_t>>& generators,
                                       const Caps& caps = {});

/// Pairs (a, b) with index a*|B| + b and componentwise product.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Caps& caps = {});

/// Semidirect product N x| H for an action of H on N by automorphisms.
/// action[h] is the permutation of N's elements given by n -> h.n; it must
/// consist of automorphisms of N (ErrKind::action_not_automorphism) and be a
/// homomorphism H -> Aut(N) (ErrKind::action_not_homomorphism).
/// Pair (n, h) has index n*|H| + h, product (n1,h1)(n2,h2) = (n1 * h1.n2, h1 h2).
struct SemidirectProduct {
  GroupPtr group;
  SubgroupSet normal_part;  // {(n, e)}  — normal copy of N
  SubgroupSet complement;   // {(e, h)}  — split copy of H
};
SemidirectProduct semidirect_product(const GroupPtr& n, const GroupPtr& h,
                                     const std::vector<Permutation>& action,
                                     const Caps& caps = {});

/// G/N with canonical coset representatives (least member index). The coset
/// of the identity is element 0 whenever the parent's identity is element 0.
/// ErrKind::not_normal if N is not normal in its parent.
struct Quotient {
  GroupPtr group;
  GroupHomomorphism projection;
};
Quotient quotient_group(const GroupPtr& g, const SubgroupSet& n);

/// Largest normal subgroup of the parent contained in Q: core(Q) = the
/// intersection of all conjugates of Q. Computed twice — by direct
/// conjugate intersection and as the kernel of the coset action — and the
/// two must agree (internal consistency guard).
SubgroupSet normal_core(const SubgroupSet& q);

/// M = the intersection of the F-conjugates of A, for A a normal abelian
/// subgroup of L and L normal in F. M is normal in F, abelian, and satisfies
/// [L:M] <= [L:A]^[F:L] (asserted internally). Preconditions are reported as
/// distinct typed errors: not_subgroup / not_abelian / not_normal.
SubgroupSet intersect_conjugates(const GroupPtr& f, const SubgroupSet& l, const SubgroupSet& a);

/// {g x g^-1 : x in s} for a fixed g, as a sorted member list.
std::vector<Elem> conjugate_members(const FiniteGroup& g, const std::vector<Elem>& s, Elem by);

/// Subgroup generated inside g by `gens` (breadth-first over the table).
/// ErrKind::cap_exceeded if it exceeds `cap` (0 = no cap).
std::vector<Elem> table_closure(const FiniteGroup& g, const std::vector<Elem>& gens,
                                std::size_t cap = 0);

}  // namespace jk
