#include "jk/subgroup_enum.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "jk/error.hpp"
#include "jk/group_ops.hpp"

namespace jk {
namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Distinct cyclic subgroups <x>, keyed by member set; generator recorded for
// later joins. Sorted by (order, members) for deterministic seeding order.
struct Cyclic {
  std::vector<Elem> members;
  Elem gen;
};

std::vector<Cyclic> distinct_cyclic_subgroups(const FiniteGroup& g) {
  std::unordered_set<std::vector<Elem>, VecHash> seen;
  std::vector<Cyclic> out;
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Elem> members{g.identity()};
    for (Elem y = x; y != g.identity(); y = g.mul(y, x)) members.push_back(y);
    std::sort(members.begin(), members.end());
    if (seen.insert(members).second) out.push_back({std::move(members), x});
  }
  std::sort(out.begin(), out.end(), [](const Cyclic& a, const Cyclic& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace

std::vector<std::vector<Elem>> element_conjugacy_classes(const FiniteGroup& g) {
  constexpr Elem kUnassigned = ~Elem{0};
  std::vector<Elem> cls(g.order(), kUnassigned);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (cls[x] != kUnassigned) continue;
    Elem id = static_cast<Elem>(classes.size());
    DenseSet orbit_bits(g.order());
    for (Elem h = 0; h < g.order(); ++h) orbit_bits.set(g.conj(h, x));
    auto orbit = orbit_bits.members();
    for (Elem m : orbit) cls[m] = id;
    classes.push_back(std::move(orbit));
  }
  return classes;
}

SubgroupSet normalizer_of(const GroupPtr& g, const SubgroupSet& s) {
  DenseSet bits = s.to_set();
  std::vector<Elem> norm;
  for (Elem x = 0; x < g->order(); ++x) {
    bool stable = true;
    for (Elem m : s.members())
      if (!bits.test(g->conj(x, m))) {
        stable = false;
        break;
      }
    if (stable) norm.push_back(x);
  }
  return SubgroupSet::unchecked(g, std::move(norm));
}

std::vector<SubgroupClass> enumerate_subgroup_classes(const GroupPtr& g, const Caps& caps) {
  if (g->order() > caps.lattice_cap)
    fail(ErrKind::cap_exceeded, "group order exceeds the subgroup-lattice cap");
  const FiniteGroup& gr = *g;
  const Elem n = gr.order();

  struct ClassData {
    std::vector<Elem> rep;        // lexicographically least conjugate
    std::vector<Elem> gens;       // generators producing rep
    std::size_t class_size = 0;
  };
  std::vector<ClassData> classes;
  // Every conjugate of every discovered subgroup, mapped to its class.
  std::unordered_map<std::vector<Elem>, std::size_t, VecHash> set_to_class;

  // Registers the class of `members` (if new) and returns its id. `gens`
  // generates `members` inside g.
  auto register_class = [&](std::vector<Elem> members, std::vector<Elem> gens) -> std::size_t {
    if (auto it = set_to_class.find(members); it != set_to_class.end()) return it->second;
    std::size_t id = classes.size();
    ClassData data;
    data.rep = members;
    Elem best_conj = gr.identity();
    std::unordered_set<std::vector<Elem>, VecHash> orbit;
    for (Elem x = 0; x < n; ++x) {
      auto conj = conjugate_members(gr, members, x);
      if (conj < data.rep) {
        data.rep = conj;
        best_conj = x;
      }
      if (orbit.insert(conj).second) set_to_class.emplace(std::move(conj), id);
    }
    data.class_size = orbit.size();
    data.gens.reserve(gens.size());
    for (Elem gen : gens) data.gens.push_back(gr.conj(best_conj, gen));
    classes.push_back(std::move(data));
    return id;
  };

  auto cyclics = distinct_cyclic_subgroups(gr);
  register_class({gr.identity()}, {});
  for (const auto& c : cyclics)
    if (c.members.size() > 1) register_class(c.members, {c.gen});

  // Join every class representative with every cyclic subgroup until stable.
  // New classes are appended and processed in turn.
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    for (const auto& c : cyclics) {
      if (c.members.size() == 1) continue;
      // <U, z> = U when z already lies in U.
      if (std::binary_search(classes[ci].rep.begin(), classes[ci].rep.end(), c.gen)) continue;
      std::vector<Elem> gens = classes[ci].gens;
      gens.push_back(c.gen);
      auto joined = table_closure(gr, gens);
      register_class(std::move(joined), std::move(gens));
    }
  }

  std::vector<std::size_t> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (classes[a].rep.size() != classes[b].rep.size())
      return classes[a].rep.size() < classes[b].rep.size();
    return classes[a].rep < classes[b].rep;
  });

  std::vector<SubgroupClass> out;
  out.reserve(classes.size());
  for (std::size_t idx : order) {
    SubgroupClass sc;
    sc.representative = SubgroupSet::unchecked(g, std::move(classes[idx].rep));
    sc.class_size = classes[idx].class_size;
    sc.normal = sc.class_size == 1;
    sc.abelian = sc.representative.is_abelian();
    out.push_back(std::move(sc));
  }
  return out;
}

std::vector<SubgroupSet> enumerate_normal_subgroups(const GroupPtr& g, const Caps& caps) {
  if (g->order() > caps.normal_lattice_cap)
    fail(ErrKind::cap_exceeded, "group order exceeds the normal-subgroup cap");
  const FiniteGroup& gr = *g;

  // Normal closure of <x> is generated by the conjugacy class of x, and is
  // the same subgroup for every member of the class — one atom per class.
  std::unordered_set<std::vector<Elem>, VecHash> seen;
  std::vector<std::vector<Elem>> atoms;
  std::vector<Elem> trivial{gr.identity()};
  seen.insert(trivial);
  for (const auto& cls : element_conjugacy_classes(gr)) {
    auto closure = table_closure(gr, cls);
    if (seen.insert(closure).second) atoms.push_back(std::move(closure));
  }

  // Fixpoint under joins. For normal N and M the product set N*M is the join,
  // so no generic closure is needed.
  std::vector<std::vector<Elem>> normals{trivial};
  normals.insert(normals.end(), atoms.begin(), atoms.end());
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (const auto& atom : atoms) {
      DenseSet nbits = DenseSet::from_members(gr.order(), normals[i]);
      bool contained = true;
      for (Elem a : atom)
        if (!nbits.test(a)) {
          contained = false;
          break;
        }
      if (contained) continue;
      DenseSet prod(gr.order());
      for (Elem x : normals[i])
        for (Elem y : atom) prod.set(gr.mul(x, y));
      auto members = prod.members();
      if (seen.insert(members).second) normals.push_back(std::move(members));
    }
  }

  std::sort(normals.begin(), normals.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<SubgroupSet> out;
  out.reserve(normals.size());
  for (auto& m : normals) out.push_back(SubgroupSet::unchecked(g, std::move(m)));
  return out;
}

}  // namespace jk
