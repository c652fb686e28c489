#include <doctest.h>

#include <algorithm>

#include "jk/checks.hpp"
#include "jk/constructions.hpp"
#include "jk/error.hpp"
#include "jk/group_ops.hpp"
#include "jk/jordan.hpp"
#include "jk/subgroup_enum.hpp"

using namespace jk;

namespace {

const CheckRecord& find_record(const std::vector<CheckRecord>& recs, const std::string& id,
                               const std::string& input_contains) {
  for (const auto& r : recs)
    if (r.check_id == id && r.input.find(input_contains) != std::string::npos) return r;
  FAIL(("no record " + id + " matching " + input_contains));
  static CheckRecord dummy;
  return dummy;
}

SubgroupSet normal_of_size(const GroupPtr& g, std::size_t size) {
  for (const auto& n : enumerate_normal_subgroups(g))
    if (n.size() == size) return n;
  FAIL(("no normal subgroup of size " + std::to_string(size)));
  return SubgroupSet::trivial(g);
}

}  // namespace

TEST_CASE("record bookkeeping") {
  auto ok = make_check("gs-subgroup", "demo", BigInt(2), BigInt(6));
  CHECK(ok.status == CheckStatus::passed);
  CHECK(ok.passed());
  CHECK(ok.recheck());

  auto bad = make_check("gs-subgroup", "demo", BigInt(7), BigInt(6));
  CHECK(bad.status == CheckStatus::failed);
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.recheck());

  auto eq = make_check("expected-jordan", "demo", BigInt(6), BigInt(6), CheckRelation::eq);
  CHECK(eq.passed());
  auto neq = make_check("expected-jordan", "demo", BigInt(5), BigInt(6), CheckRelation::eq);
  CHECK_FALSE(neq.passed());

  auto skip = make_skip("centerless-bound", "demo", "center is not trivial");
  CHECK(skip.status == CheckStatus::skipped);
  CHECK_FALSE(skip.passed());
  CHECK(skip.recheck());  // nothing recorded to contradict
  CHECK(skip.skip_reason == "center is not trivial");

  CHECK(std::string(to_string(CheckStatus::passed)) == "passed");
  CHECK(std::string(to_string(CheckStatus::failed)) == "failed");
  CHECK(std::string(to_string(CheckStatus::skipped)) == "skipped");
}

TEST_CASE("subgroup and quotient monotonicity records") {
  auto s4 = symmetric_group(4);
  auto recs = check_gs_theorem(s4, "sym4");
  // One record per subgroup class (11) + one per normal subgroup (4).
  std::size_t subgroup_records = 0, quotient_records = 0;
  for (const auto& r : recs) {
    CHECK(r.passed());
    CHECK(r.recheck());
    if (r.check_id == "gs-subgroup") ++subgroup_records;
    if (r.check_id == "gs-quotient") ++quotient_records;
  }
  CHECK(subgroup_records == 11);
  CHECK(quotient_records == 4);

  // J(S4/V4) = J(S3) = 2 <= 6 = J(S4).
  const auto& quo = find_record(recs, "gs-quotient", "order 4");
  CHECK(quo.lhs == 2);
  CHECK(quo.rhs == 6);

  // The whole group is one of the subgroup records, with equality.
  const auto& whole = find_record(recs, "gs-subgroup", "order 24");
  CHECK(whole.lhs == 6);
  CHECK(whole.rhs == 6);
}

TEST_CASE("product bounds") {
  auto s3 = symmetric_group(3);
  auto recs = check_product_bounds(s3, s3, "sym3", "sym3");
  REQUIRE(recs.size() == 2);
  const auto& lower = find_record(recs, "product-lower", "sym3 x sym3");
  const auto& upper = find_record(recs, "product-upper", "sym3 x sym3");
  CHECK(lower.passed());
  CHECK(upper.passed());
  CHECK(lower.lhs == 2);   // max(J, J)
  CHECK(lower.rhs == 4);   // J of the product
  CHECK(upper.lhs == 4);
  CHECK(upper.rhs == 4);   // J * J -- the upper bound is attained here

  auto mixed = check_product_bounds(symmetric_group(4), cyclic_group(2), "sym4", "c2");
  CHECK(find_record(mixed, "product-lower", "").lhs == 6);
  CHECK(find_record(mixed, "product-upper", "").lhs == 6);
  CHECK(find_record(mixed, "product-upper", "").rhs == 6);
  for (const auto& r : mixed) CHECK(r.passed());
}

TEST_CASE("split extension bound") {
  auto c3 = cyclic_group(3);
  auto sp = semidirect_product(c3, cyclic_group(2),
                               {Permutation(3), Permutation::from_images({0, 2, 1})});
  auto rec = check_split_bound(sp, "c3:c2");
  CHECK(rec.check_id == "gs-split");
  CHECK(rec.passed());
  CHECK(rec.lhs == 1);  // J(G/N) = J(C2) = 1
  CHECK(rec.rhs == 2);  // J(S3) = 2
  // The complement's members witness the splitting.
  bool has_witness = false;
  for (const auto& [name, members] : rec.witnesses)
    if (name == "complement") has_witness = members.size() == 2;
  CHECK(has_witness);
}

TEST_CASE("extension bound") {
  auto s4 = symmetric_group(4);
  auto v4 = normal_of_size(s4, 4);
  auto rec = check_extension_bound(s4, v4, "sym4 / v4");
  CHECK(rec.passed());
  CHECK(rec.lhs == 6);   // J(S4)
  CHECK(rec.rhs == 6);   // b * J_H^b = 6 * 1^6 -- attained
  bool saw_b = false;
  for (const auto& [name, v] : rec.quantities)
    if (name == "b_quotient") saw_b = v == 6;
  CHECK(saw_b);

  // S3 x C2 over its S3 factor: J = 2 <= b * J_H^b = 2 * 2^2 = 8.
  auto g = direct_product(symmetric_group(3), cyclic_group(2));
  auto s3n = normal_of_size(g, 6);
  // Pick the nonabelian order-6 normal subgroup (the S3 factor).
  for (const auto& n : enumerate_normal_subgroups(g))
    if (n.size() == 6 && !n.is_abelian()) {
      auto r2 = check_extension_bound(g, n, "sym3xc2 / sym3");
      CHECK(r2.passed());
      CHECK(r2.lhs == 2);
      CHECK(r2.rhs == 8);
    }

  // The right side always dominates J of the quotient itself.
  for (const auto& n : enumerate_normal_subgroups(s4)) {
    auto r = check_extension_bound(s4, n, "sym4 sweep");
    auto quo = quotient_group(s4, n);
    CHECK(r.rhs >= BigInt(jordan_constant(quo.group).jordan_constant));
  }

  // Non-normal input is a typed error.
  Elem t = 0;
  while (s4->element_order(t) != 2) ++t;
  bool found_non_normal = false;
  for (Elem x = t; x < 24; ++x)
    if (s4->element_order(x) == 2) {
      auto c2 = SubgroupSet::create(s4, {s4->identity(), x});
      if (!c2.is_normal()) {
        found_non_normal = true;
        CHECK_THROWS_AS(check_extension_bound(s4, c2, "bad"), Error);
        break;
      }
    }
  CHECK(found_non_normal);
}

TEST_CASE("centerless bound") {
  auto s4 = symmetric_group(4);
  auto a4 = normal_of_size(s4, 12);
  auto rec = check_centerless_bound(s4, a4, "sym4 / alt4");
  CHECK(rec.passed());
  CHECK(rec.lhs == 6);    // J(S4)
  CHECK(rec.rhs == 24);   // |Aut(A4)| * J(C2)^24 = 24
  bool saw_aut = false;
  for (const auto& [name, v] : rec.quantities)
    if (name == "aut_order") saw_aut = v == 24;
  CHECK(saw_aut);

  // Abelian normal subgroups have nontrivial center: typed refusal.
  auto v4 = normal_of_size(s4, 4);
  try {
    check_centerless_bound(s4, v4, "sym4 / v4");
    FAIL("expected center_not_trivial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::center_not_trivial);
  }

  // S5 / A5: J(S5) = 120 <= |Aut(A5)| * J(C2)^120 = 120 -- equality again.
  auto s5 = symmetric_group(5);
  auto a5 = normal_of_size(s5, 60);
  auto r5 = check_centerless_bound(s5, a5, "sym5 / alt5");
  CHECK(r5.passed());
  CHECK(r5.lhs == 120);
  CHECK(r5.rhs == 120);
}

TEST_CASE("core bound") {
  auto s4 = symmetric_group(4);
  // Any order-6 subgroup has index 4 and trivial core: 24 <= 4! = 24.
  for (const auto& cls : enumerate_subgroup_classes(s4))
    if (cls.representative.size() == 6) {
      auto rec = check_core_bound(cls.representative, "sym4 / stab");
      CHECK(rec.passed());
      CHECK(rec.lhs == 24);
      CHECK(rec.rhs == 24);
      bool witnessed = false;
      for (const auto& [name, members] : rec.witnesses)
        if (name == "core") witnessed = members.size() == 1;
      CHECK(witnessed);
    }
  // A normal subgroup is its own core: [P:core] = [P:Q] <= [P:Q]!.
  auto a4 = normal_of_size(s4, 12);
  auto rec = check_core_bound(a4, "sym4 / alt4");
  CHECK(rec.passed());
  CHECK(rec.lhs == 2);
  CHECK(rec.rhs == 2);
}

TEST_CASE("conjugate intersection bound") {
  auto s4 = symmetric_group(4);
  auto a4 = normal_of_size(s4, 12);
  auto v4 = normal_of_size(s4, 4);
  auto rec = check_intersection_bound(s4, SubgroupSet::create(s4, a4.members()),
                                      SubgroupSet::create(s4, v4.members()), "sym4 intersection");
  CHECK(rec.passed());
  CHECK(rec.lhs == 3);  // [A4 : V4], V4 already normal in S4
  CHECK(rec.rhs == 9);  // [A4 : V4]^[S4 : A4] = 3^2
}

TEST_CASE("zarhin index checks") {
  auto rec = check_zarhin_index({2});
  CHECK(rec.passed());
  CHECK(rec.check_id == "zarhin-index");
  CHECK(rec.lhs == 2);
  CHECK(rec.rhs == 2);  // dihedral(8): an index-2 abelian subgroup exists
  bool saw_order = false;
  for (const auto& [name, v] : rec.quantities)
    if (name == "group_order") saw_order = v == 8;
  CHECK(saw_order);

  auto rec33 = check_zarhin_index({3});
  CHECK(rec33.passed());
  CHECK(rec33.lhs == 3);
  CHECK(rec33.rhs == 3);  // Heisenberg mod 3: abelian C3 x C3 of index 3
}
