#include <doctest.h>

#include "jk/constructions.hpp"
#include "jk/error.hpp"
#include "jk/group_ops.hpp"
#include "jk/isomorphism.hpp"

using namespace jk;

TEST_CASE("isomorphism decisions") {
  CHECK_FALSE(are_isomorphic(cyclic_group(4), abelian_group({2, 2})).isomorphic);
  CHECK(are_isomorphic(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))).isomorphic);
  CHECK(are_isomorphic(symmetric_group(3), dihedral_group(6)).isomorphic);
  CHECK_FALSE(are_isomorphic(dihedral_group(8), quaternion_group(8)).isomorphic);
  CHECK_FALSE(are_isomorphic(cyclic_group(3), cyclic_group(4)).isomorphic);

  // Three pairwise non-isomorphic groups of order 12.
  auto d12 = dihedral_group(12);
  auto a4 = alternating_group(4);
  auto c12 = cyclic_group(12);
  CHECK_FALSE(are_isomorphic(d12, a4).isomorphic);
  CHECK_FALSE(are_isomorphic(d12, c12).isomorphic);
  CHECK_FALSE(are_isomorphic(a4, c12).isomorphic);
}

TEST_CASE("isomorphism witnesses are verified homomorphisms") {
  auto r = are_isomorphic(symmetric_group(3), dihedral_group(6));
  REQUIRE(r.isomorphic);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->is_bijective());
  CHECK(r.witness->kernel().size() == 1);
}

TEST_CASE("the binary icosahedral group is SL_2(F_5)") {
  auto b = binary_icosahedral_group();
  auto sl = matrix_group_over_prime_field(2, 5, {{1, 1, 0, 1}, {0, 4, 1, 0}});
  CHECK(b->order() == 120);
  CHECK(are_isomorphic(b, sl).isomorphic);
  CHECK_FALSE(are_isomorphic(b, symmetric_group(5)).isomorphic);
  CHECK(center_of(b).size() == 2);
}

TEST_CASE("small zarhin groups are familiar") {
  // Q over Z/2 is dihedral of order 8 (five involutions rule out Q8).
  CHECK(are_isomorphic(zarhin_group({2}), dihedral_group(8)).isomorphic);
  // Q over Z/3 is the Heisenberg group mod 3 = UT(3,3).
  auto heis = matrix_group_over_prime_field(3, 3,
                                            {{1, 1, 0, 0, 1, 0, 0, 0, 1},
                                             {1, 0, 0, 0, 1, 1, 0, 0, 1},
                                             {1, 0, 1, 0, 1, 0, 0, 0, 1}});
  CHECK(heis->order() == 27);
  CHECK(are_isomorphic(zarhin_group({3}), heis).isomorphic);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(abelian_group({2, 2})).group->order() == 6);   // GL(2,2)
  CHECK(automorphism_group(symmetric_group(3)).group->order() == 6);     // inner
  CHECK(automorphism_group(cyclic_group(8)).group->order() == 4);        // (Z/8)^*
  CHECK(automorphism_group(quaternion_group(8)).group->order() == 24);   // S4
  CHECK(automorphism_group(alternating_group(4)).group->order() == 24);  // S4
  CHECK(automorphism_group(cyclic_group(1)).group->order() == 1);

  auto aut = automorphism_group(abelian_group({2, 2}));
  CHECK(aut.automorphisms.size() == 6);
  CHECK(aut.automorphisms.front().is_identity());  // element 0 is the identity map
  // Composition in the automorphism group matches permutation composition.
  for (Elem i = 0; i < 6; ++i)
    for (Elem j = 0; j < 6; ++j) {
      auto composed = aut.automorphisms[i] * aut.automorphisms[j];
      CHECK(aut.automorphisms[aut.group->mul(i, j)] == composed);
    }
}

TEST_CASE("automorphism cap") {
  Caps caps;
  caps.automorphism_cap = 8;
  try {
    automorphism_group(dihedral_group(12), caps);
    FAIL("expected cap_exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::cap_exceeded);
  }
}

TEST_CASE("search budget is a typed failure") {
  Caps caps;
  caps.search_budget = 10;
  try {
    // Plenty of branching: two elementary abelian groups of order 16.
    are_isomorphic(abelian_group({2, 2, 2, 2}), abelian_group({2, 2, 2, 2}), caps);
    FAIL("expected cap_exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::cap_exceeded);
  }
}
