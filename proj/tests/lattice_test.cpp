#include <doctest.h>

#include <numeric>

#include "jk/constructions.hpp"
#include "jk/error.hpp"
#include "jk/group_ops.hpp"
#include "jk/subgroup_enum.hpp"
#include "oracles.hpp"

using namespace jk;

namespace {

// Engine classes, expanded back to the full set of subgroups, must equal the
// oracle's list exactly.
void check_against_oracle(const GroupPtr& g) {
  auto oracle_subs = oracle::all_subgroups(*g);
  auto classes = enumerate_subgroup_classes(g);

  std::size_t total = 0;
  std::set<std::vector<Elem>> from_engine;
  for (const auto& cls : classes) {
    total += cls.class_size;
    std::set<std::vector<Elem>> orbit;
    for (Elem x = 0; x < g->order(); ++x)
      orbit.insert(conjugate_members(*g, cls.representative.members(), x));
    CHECK(orbit.size() == cls.class_size);
    // The representative is the lexicographically least member of its class.
    CHECK(*orbit.begin() == cls.representative.members());
    from_engine.insert(orbit.begin(), orbit.end());
    CHECK(cls.abelian == cls.representative.is_abelian());
    CHECK(cls.normal == (cls.class_size == 1));
    CHECK(cls.normal == cls.representative.is_normal());
  }
  CHECK(total == oracle_subs.size());
  CHECK(from_engine == oracle_subs);
  CHECK(classes.size() == oracle::conjugacy_class_count(*g, oracle_subs));
}

}  // namespace

TEST_CASE("subgroup classes match the brute-force oracle") {
  check_against_oracle(symmetric_group(3));      // 6 subgroups, 4 classes
  check_against_oracle(symmetric_group(4));      // 30 subgroups, 11 classes
  check_against_oracle(quaternion_group(8));     // 6 subgroups, all normal
  check_against_oracle(dihedral_group(12));
  check_against_oracle(alternating_group(4));
  check_against_oracle(abelian_group({2, 2, 2}));
  check_against_oracle(cyclic_group(12));
  check_against_oracle(zarhin_group({2}));
}

TEST_CASE("known subgroup counts") {
  auto s3 = enumerate_subgroup_classes(symmetric_group(3));
  CHECK(s3.size() == 4);
  CHECK(std::accumulate(s3.begin(), s3.end(), std::size_t(0),
                        [](std::size_t acc, const SubgroupClass& c) { return acc + c.class_size; }) == 6);

  auto s4 = enumerate_subgroup_classes(symmetric_group(4));
  CHECK(s4.size() == 11);
  CHECK(std::accumulate(s4.begin(), s4.end(), std::size_t(0),
                        [](std::size_t acc, const SubgroupClass& c) { return acc + c.class_size; }) == 30);

  auto s5 = enumerate_subgroup_classes(symmetric_group(5));
  CHECK(s5.size() == 19);
  CHECK(std::accumulate(s5.begin(), s5.end(), std::size_t(0),
                        [](std::size_t acc, const SubgroupClass& c) { return acc + c.class_size; }) == 156);
}

TEST_CASE("class sizes equal normalizer indices") {
  auto g = symmetric_group(4);
  for (const auto& cls : enumerate_subgroup_classes(g)) {
    auto n = normalizer_of(g, cls.representative);
    CHECK(cls.class_size == g->order() / n.size());
    // The normalizer contains the subgroup it normalizes.
    for (Elem x : cls.representative.members()) CHECK(n.contains(x));
  }
}

TEST_CASE("classes are sorted and start at the trivial subgroup") {
  auto classes = enumerate_subgroup_classes(alternating_group(5));
  REQUIRE(!classes.empty());
  CHECK(classes.front().representative.size() == 1);
  CHECK(classes.back().representative.size() == 60);
  for (std::size_t i = 1; i < classes.size(); ++i)
    CHECK(classes[i - 1].representative.size() <= classes[i].representative.size());
  CHECK(classes.size() == 9);  // A5: trivial, C2, C3, V4, C5, S3, D10, A4, A5
}

TEST_CASE("normal subgroup enumeration") {
  // Matches the oracle's filtered list on oracle-sized groups.
  for (auto g : {symmetric_group(4), dihedral_group(12), quaternion_group(16),
                 abelian_group({2, 4}), zarhin_group({2})}) {
    std::set<std::vector<Elem>> expect;
    for (const auto& h : oracle::all_subgroups(*g))
      if (oracle::is_normal(*g, h)) expect.insert(h);
    std::set<std::vector<Elem>> got;
    for (const auto& n : enumerate_normal_subgroups(g)) got.insert(n.members());
    CHECK(got == expect);
  }

  auto s4_normals = enumerate_normal_subgroups(symmetric_group(4));
  CHECK(s4_normals.size() == 4);  // 1, V4, A4, S4
  std::vector<std::size_t> sizes;
  for (const auto& n : s4_normals) sizes.push_back(n.size());
  CHECK(sizes == std::vector<std::size_t>{1, 4, 12, 24});

  // Simple groups have exactly the two obvious normal subgroups; this relies
  // on joins, not the full lattice, so it scales to Alt(7) in the acceptance
  // run.
  CHECK(enumerate_normal_subgroups(alternating_group(5)).size() == 2);
}

TEST_CASE("element conjugacy classes") {
  auto s4 = symmetric_group(4);
  auto classes = element_conjugacy_classes(*s4);
  CHECK(classes.size() == 5);
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 3, 6, 6, 8});
  CHECK(classes.front() == std::vector<Elem>{s4->identity()});
}

TEST_CASE("lattice cap is typed") {
  Caps caps;
  caps.lattice_cap = 100;
  try {
    enumerate_subgroup_classes(symmetric_group(5), caps);
    FAIL("expected cap_exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::cap_exceeded);
  }
}

TEST_CASE("sym(6) lattice at full scale") {
  auto classes = enumerate_subgroup_classes(symmetric_group(6));
  CHECK(classes.size() == 56);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.class_size;
  CHECK(total == 1455);
}
