#include <doctest.h>

#include <functional>

#include "jk/constructions.hpp"
#include "jk/error.hpp"
#include "jk/finite_group.hpp"

using namespace jk;

namespace {

// Z/n by hand — no library construction involved.
std::vector<Elem> cyclic_table(Elem n) {
  std::vector<Elem> t(std::size_t(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[std::size_t(a) * n + b] = (a + b) % n;
  return t;
}

ErrKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a typed error");
  return ErrKind::invalid_parameter;
}

}  // namespace

TEST_CASE("valid table construction") {
  auto g = FiniteGroup::create(6, cyclic_table(6), {"0", "1", "2", "3", "4", "5"});
  CHECK(g->order() == 6);
  CHECK(g->identity() == 0);
  CHECK(g->mul(4, 5) == 3);
  CHECK(g->inv(2) == 4);
  CHECK(g->element_order(1) == 6);
  CHECK(g->element_order(2) == 3);
  CHECK(g->element_order(0) == 1);
  CHECK(g->is_abelian());
  CHECK(g->label(3) == "3");
  CHECK(FiniteGroup::create(1, {0})->order() == 1);
}

TEST_CASE("labels fall back to indices") {
  auto g = FiniteGroup::create(2, cyclic_table(2));
  CHECK_FALSE(g->has_labels());
  CHECK(g->label(1) == "g1");
  CHECK_THROWS_AS(FiniteGroup::create(2, cyclic_table(2), {"just-one"}), Error);
}

TEST_CASE("every group axiom violation is invalid_table") {
  // Entry out of range.
  auto t = cyclic_table(3);
  t[4] = 9;
  CHECK(kind_of([&] { FiniteGroup::create(3, t); }) == ErrKind::invalid_table);

  // Row not a bijection (but all entries in range).
  t = cyclic_table(3);
  t[3] = 0;  // row 1 becomes 0,2,0
  CHECK(kind_of([&] { FiniteGroup::create(3, t); }) == ErrKind::invalid_table);

  // Latin square that is not a group: the "subtraction table" of Z/3.
  std::vector<Elem> sub(9);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) sub[a * 3 + b] = (3 + a - b) % 3;
  CHECK(kind_of([&] { FiniteGroup::create(3, sub); }) == ErrKind::invalid_table);

  // Wrong size entirely.
  CHECK(kind_of([&] { FiniteGroup::create(3, cyclic_table(2)); }) == ErrKind::invalid_table);
}

TEST_CASE("sampled validation still rejects a broken big table") {
  // Order 729 > full_validation_cap: swap two non-identity entries of a valid
  // table; either bijectivity or sampled associativity must notice.
  Elem n = 729;
  auto t = cyclic_table(n);
  std::swap(t[std::size_t(3) * n + 5], t[std::size_t(3) * n + 6]);
  Caps caps;
  REQUIRE(n > caps.full_validation_cap);
  CHECK(kind_of([&] { FiniteGroup::create(n, t, {}, caps); }) == ErrKind::invalid_table);
  CHECK(FiniteGroup::create(n, cyclic_table(n), {}, caps)->order() == n);
}

TEST_CASE("subgroup sets") {
  auto g = symmetric_group(3);  // order 6; elements 0..5
  auto whole = SubgroupSet::whole(g);
  CHECK(whole.size() == 6);
  CHECK(whole.is_normal());
  CHECK_FALSE(whole.is_abelian());
  CHECK(SubgroupSet::trivial(g).size() == 1);

  // The three-element subgroup = identity + both 3-cycles.
  std::vector<Elem> rot{g->identity()};
  for (Elem x = 0; x < 6; ++x)
    if (g->element_order(x) == 3) rot.push_back(x);
  auto a3 = SubgroupSet::create(g, rot);
  CHECK(a3.size() == 3);
  CHECK(a3.is_normal());
  CHECK(a3.is_abelian());
  CHECK(a3.index() == 2);

  // A transposition generates an order-2 subgroup that is not normal.
  Elem t = 0;
  while (g->element_order(t) != 2) ++t;
  auto c2 = SubgroupSet::create(g, {g->identity(), t});
  CHECK_FALSE(c2.is_normal());
  CHECK(c2.is_abelian());

  CHECK(kind_of([&] { SubgroupSet::create(g, {g->identity(), t, Elem(t == 1 ? 2 : 1)}); }) ==
        ErrKind::not_subgroup);
  CHECK(kind_of([&] { SubgroupSet::create(g, {t}); }) == ErrKind::not_subgroup);

  auto sub = a3.as_group();
  CHECK(sub->order() == 3);
  CHECK(sub->is_abelian());
  CHECK(sub->identity() == 0);
}

TEST_CASE("homomorphisms") {
  auto c6 = FiniteGroup::create(6, cyclic_table(6));
  auto c3 = FiniteGroup::create(3, cyclic_table(3));
  auto h = GroupHomomorphism::create(c6, c3, {0, 1, 2, 0, 1, 2});
  CHECK(h.kernel().size() == 2);
  CHECK(h.image().size() == 3);
  CHECK_FALSE(h.is_bijective());
  // x -> 2x mod 3 is a second valid homomorphism; a map that sends the
  // generator to 1 but its square to 1 again is not.
  CHECK(GroupHomomorphism::create(c6, c3, {0, 2, 1, 0, 2, 1}).image().size() == 3);
  CHECK(kind_of([&] { GroupHomomorphism::create(c6, c3, {0, 1, 1, 0, 1, 1}); }) ==
        ErrKind::invalid_parameter);
}

TEST_CASE("structure report") {
  auto q8 = quaternion_group(8);
  auto r = structure_report(q8);
  CHECK(r.order == 8);
  CHECK_FALSE(r.abelian);
  CHECK(r.center.size() == 2);
  CHECK(r.exponent == 4);
  CHECK(r.order_histogram[1] == 1);
  CHECK(r.order_histogram[2] == 1);  // the distinguishing fact vs dihedral(8)
  CHECK(r.order_histogram[4] == 6);

  auto c12 = cyclic_group(12);
  auto rc = structure_report(c12);
  CHECK(rc.abelian);
  CHECK(rc.center.size() == 12);
  CHECK(rc.exponent == 12);
  CHECK(center_of(symmetric_group(3)).size() == 1);
}
