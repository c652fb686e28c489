#include "jk/jordan.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

#include "jk/error.hpp"
#include "jk/isomorphism.hpp"

namespace jk {

NormalAbelianIndex min_normal_abelian_index(const GroupPtr& g, const Caps& caps) {
  if (g->order() <= 1 || g->is_abelian()) return {1, SubgroupSet::whole(g)};
  auto normals = enumerate_normal_subgroups(g, caps);
  // normals are sorted by (order, members); the first of maximal abelian order
  // is the canonical witness.
  const SubgroupSet* best = nullptr;
  for (const auto& n : normals) {
    if (best && n.size() <= best->size()) continue;
    if (n.is_abelian()) best = &n;
  }
  // The trivial subgroup is always normal abelian, so best is set.
  return {g->order() / best->size(), *best};
}

AbelianIndex min_abelian_index(const GroupPtr& g, const Caps& caps) {
  if (g->order() > caps.lattice_cap)
    fail(ErrKind::cap_exceeded, "group order exceeds the lattice cap");
  const FiniteGroup& gr = *g;
  const Elem n = gr.order();

  if (gr.is_abelian()) return {1, SubgroupSet::whole(g)};

  std::vector<DenseSet> cent(n, DenseSet(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (gr.commutes(x, y)) cent[x].set(y);

  std::size_t best_size = 1;
  std::vector<Elem> best_members{gr.identity()};
  std::unordered_set<DenseSet, DenseSet::Hash> visited;

  auto descend = [&](auto&& self, const DenseSet& c, std::size_t size) -> void {
    if (size <= best_size) return;
    if (!visited.insert(c).second) return;
    auto members = c.members();
    // Center of C: elements commuting with all of C.
    std::vector<Elem> central;
    for (Elem x : members)
      if (c.subset_of(cent[x])) central.push_back(x);
    if (central.size() == members.size()) {  // C abelian
      best_size = size;
      best_members = std::move(members);
      return;
    }
    DenseSet central_bits = DenseSet::from_members(n, central);
    for (Elem x : members) {
      if (central_bits.test(x)) continue;
      DenseSet d = c;
      d &= cent[x];
      std::size_t dsize = d.count();
      if (dsize > best_size) self(self, d, dsize);
    }
  };

  DenseSet whole(n);
  for (Elem x = 0; x < n; ++x) whole.set(x);
  descend(descend, whole, n);

  return {n / best_size, SubgroupSet::unchecked(g, std::move(best_members))};
}

namespace {

// Per-class result carrying enough for a canonical argmax reduction.
struct ClassAlpha {
  std::uint64_t alpha = 1;
  std::vector<Elem> witness_abelian;  // in parent indices
};

ClassAlpha class_alpha(const SubgroupClass& cls, const Caps& caps) {
  GroupPtr k = cls.representative.as_group();
  NormalAbelianIndex best = min_normal_abelian_index(k, caps);
  ClassAlpha out;
  out.alpha = best.index;
  out.witness_abelian.reserve(best.witness.size());
  for (Elem local : best.witness.members())
    out.witness_abelian.push_back(cls.representative.members()[local]);
  return out;
}

}  // namespace

AnalysisReport jordan_constant(const GroupPtr& g, const Caps& caps, unsigned jobs) {
  auto t0 = std::chrono::steady_clock::now();
  auto classes = enumerate_subgroup_classes(g, caps);

  std::vector<ClassAlpha> results(classes.size());
  if (jobs <= 1 || classes.size() < 2) {
    for (std::size_t i = 0; i < classes.size(); ++i) results[i] = class_alpha(classes[i], caps);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < classes.size(); i = next.fetch_add(1))
        results[i] = class_alpha(classes[i], caps);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }

  // Canonical reduction: maximal alpha, ties resolved toward the
  // lexicographically least subgroup member sequence — independent of
  // evaluation order, hence of the job count.
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].alpha > results[best].alpha ||
        (results[i].alpha == results[best].alpha &&
         classes[i].representative.members() < classes[best].representative.members()))
      best = i;
  }

  AnalysisReport report;
  report.jordan_constant = results[best].alpha;
  report.bound_constant = g->order();
  report.witness_subgroup = classes[best].representative;
  report.witness_abelian = SubgroupSet::unchecked(g, std::move(results[best].witness_abelian));
  report.subgroup_class_count = classes.size();
  report.elapsed = std::chrono::steady_clock::now() - t0;
  return report;
}

std::vector<SimpleClass> simple_nonabelian_classes(const GroupPtr& g, const Caps& caps) {
  auto classes = enumerate_subgroup_classes(g, caps);
  std::vector<SimpleClass> out;
  for (const auto& cls : classes) {
    if (cls.abelian || cls.representative.size() == 1) continue;
    GroupPtr k = cls.representative.as_group();
    if (enumerate_normal_subgroups(k, caps).size() != 2) continue;
    bool known = false;
    for (const auto& kept : out) {
      if (kept.group->order() != k->order()) continue;
      if (are_isomorphic(kept.group, k, caps).isomorphic) {
        known = true;
        break;
      }
    }
    if (!known) out.push_back({k, cls.representative});
  }
  return out;
}

}  // namespace jk
