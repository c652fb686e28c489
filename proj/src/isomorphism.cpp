#include "jk/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "jk/error.hpp"
#include "jk/group_ops.hpp"

namespace jk {
namespace {

constexpr Elem kUndef = ~Elem{0};

// (element order, centralizer size) — constant on isomorphism orbits.
std::vector<std::pair<Elem, Elem>> invariants(const FiniteGroup& g) {
  std::vector<std::pair<Elem, Elem>> inv(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Elem cent = 0;
    for (Elem y = 0; y < g.order(); ++y)
      if (g.commutes(x, y)) ++cent;
    inv[x] = {g.element_order(x), cent};
  }
  return inv;
}

struct Search {
  const FiniteGroup& g1;
  const FiniteGroup& g2;
  std::vector<Elem> gens;                    // generator sequence for g1
  std::vector<std::vector<Elem>> candidates; // image candidates per generator
  std::size_t budget;
  bool collect_all = false;
  std::vector<std::vector<Elem>> found;

  struct State {
    std::vector<Elem> dom;   // members of <gens[0..k]> in closure order
    std::vector<Elem> img;   // partial map, kUndef outside dom
    std::vector<char> used;  // image elements already taken
  };

  void spend(std::size_t amount) {
    if (budget < amount)
      fail(ErrKind::cap_exceeded, "isomorphism search budget exhausted");
    budget -= amount;
  }

  // Extends the partial isomorphism with gens[k] -> y, closing under products
  // and propagating images. Returns the closed state or nullopt on conflict.
  std::optional<State> extend(const State& s, Elem g, Elem y) {
    if (s.used[y]) return std::nullopt;
    State t = s;
    if (t.img[g] != kUndef) {
      // Generator already forced by the closure; only the matching image works.
      return t.img[g] == y ? std::optional<State>(std::move(t)) : std::nullopt;
    }
    t.img[g] = y;
    t.used[y] = 1;
    t.dom.push_back(g);
    for (std::size_t qi = s.dom.size(); qi < t.dom.size(); ++qi) {
      Elem a = t.dom[qi];
      for (std::size_t j = 0; j <= qi; ++j) {
        Elem b = t.dom[j];
        spend(2);
        // both orders: a*b and b*a
        for (auto [x, yi] : {std::pair{g1.mul(a, b), g2.mul(t.img[a], t.img[b])},
                             std::pair{g1.mul(b, a), g2.mul(t.img[b], t.img[a])}}) {
          if (t.img[x] != kUndef) {
            if (t.img[x] != yi) return std::nullopt;
          } else {
            if (t.used[yi]) return std::nullopt;
            t.img[x] = yi;
            t.used[yi] = 1;
            t.dom.push_back(x);
          }
        }
      }
    }
    return t;
  }

  bool dfs(std::size_t k, const State& s) {
    if (k == gens.size()) {
      found.push_back(s.img);
      return !collect_all;  // stop at the first hit unless collecting
    }
    for (Elem y : candidates[k]) {
      auto next = extend(s, gens[k], y);
      if (next && dfs(k + 1, *next)) return true;
    }
    return false;
  }

  void run() {
    State init;
    init.img.assign(g1.order(), kUndef);
    init.used.assign(g2.order(), 0);
    init.dom = {g1.identity()};
    init.img[g1.identity()] = g2.identity();
    init.used[g2.identity()] = 1;
    dfs(0, init);
  }
};

// Greedy generating sequence: each step picks the element outside the current
// closure whose invariant class in g2 is smallest (fewest candidate images).
void choose_generators(const FiniteGroup& g1, const std::vector<std::pair<Elem, Elem>>& inv1,
                       const std::vector<std::pair<Elem, Elem>>& inv2, Search& search) {
  std::map<std::pair<Elem, Elem>, std::vector<Elem>> classes2;
  for (Elem y = 0; y < inv2.size(); ++y) classes2[inv2[y]].push_back(y);

  std::vector<Elem> closure = table_closure(g1, {});
  DenseSet in_closure = DenseSet::from_members(g1.order(), closure);
  while (closure.size() < g1.order()) {
    Elem best = kUndef;
    std::size_t best_count = ~std::size_t{0};
    for (Elem x = 0; x < g1.order(); ++x) {
      if (in_closure.test(x)) continue;
      auto it = classes2.find(inv1[x]);
      std::size_t count = it == classes2.end() ? 0 : it->second.size();
      if (count < best_count) {
        best_count = count;
        best = x;
      }
    }
    search.gens.push_back(best);
    auto it = classes2.find(inv1[best]);
    search.candidates.push_back(it == classes2.end() ? std::vector<Elem>{} : it->second);
    closure = table_closure(g1, search.gens);
    in_closure = DenseSet::from_members(g1.order(), closure);
  }
}

std::vector<std::vector<Elem>> all_isomorphisms(const FiniteGroup& g1, const FiniteGroup& g2,
                                                bool collect_all, const Caps& caps) {
  auto inv1 = invariants(g1);
  auto inv2 = invariants(g2);
  {
    auto h1 = inv1, h2 = inv2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return {};  // invariant multisets differ: not isomorphic
  }
  Search search{g1, g2, {}, {}, caps.search_budget};
  search.collect_all = collect_all;
  choose_generators(g1, inv1, inv2, search);
  search.run();
  return std::move(search.found);
}

}  // namespace

IsoResult are_isomorphic(const GroupPtr& g1, const GroupPtr& g2, const Caps& caps) {
  if (g1->order() != g2->order()) return {false, std::nullopt};
  auto maps = all_isomorphisms(*g1, *g2, false, caps);
  if (maps.empty()) return {false, std::nullopt};
  return {true, GroupHomomorphism::create(g1, g2, std::move(maps.front()))};
}

AutomorphismGroup automorphism_group(const GroupPtr& h, const Caps& caps) {
  if (h->order() > caps.automorphism_cap)
    fail(ErrKind::cap_exceeded, "group order exceeds the automorphism cap");
  auto maps = all_isomorphisms(*h, *h, true, caps);
  std::sort(maps.begin(), maps.end());
  // The identity map is lexicographically least among permutations, so it must
  // land at index 0.
  if (maps.empty() || !std::is_sorted(maps.front().begin(), maps.front().end()))
    throw std::logic_error("automorphism search lost the identity map");
  if (maps.size() > caps.closure_cap)
    fail(ErrKind::cap_exceeded, "automorphism group order exceeds the closure cap");

  const Elem n = static_cast<Elem>(maps.size());
  std::vector<Permutation> autos;
  autos.reserve(n);
  for (auto& m : maps) autos.push_back(Permutation::from_images(m));
  std::unordered_map<Permutation, Elem, Permutation::Hash> index;
  for (Elem i = 0; i < n; ++i) index.emplace(autos[i], i);
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = index.at(autos[i] * autos[j]);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& a : autos) labels.push_back(a.cycle_string());
  return {FiniteGroup::create(n, std::move(table), std::move(labels), caps), std::move(autos)};
}

}  // namespace jk
