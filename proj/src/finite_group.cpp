#include "jk/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "jk/error.hpp"

namespace jk {

GroupPtr FiniteGroup::create(Elem order, std::vector<Elem> table,
                             std::vector<std::string> labels, const Caps& caps) {
  if (order == 0) fail(ErrKind::invalid_table, "group order must be positive");
  if (table.size() != static_cast<std::size_t>(order) * order)
    fail(ErrKind::invalid_table, "table size does not match order^2");
  if (!labels.empty() && labels.size() != order)
    fail(ErrKind::invalid_table, "label count does not match order");
  for (Elem v : table)
    if (v >= order) fail(ErrKind::invalid_table, "table entry out of range");

  auto at = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * order + b]; };

  // Rows and columns must be permutations of the element set.
  std::vector<bool> seen(order);
  for (Elem a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (Elem b = 0; b < order; ++b) {
      Elem v = at(a, b);
      if (seen[v]) fail(ErrKind::invalid_table, "row is not a bijection");
      seen[v] = true;
    }
  }
  for (Elem b = 0; b < order; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (Elem a = 0; a < order; ++a) {
      Elem v = at(a, b);
      if (seen[v]) fail(ErrKind::invalid_table, "column is not a bijection");
      seen[v] = true;
    }
  }

  // Two-sided identity.
  std::optional<Elem> identity;
  for (Elem e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (Elem x = 0; x < order && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) fail(ErrKind::invalid_table, "no two-sided identity");

  // Two-sided inverses.
  std::vector<Elem> inverses(order);
  for (Elem a = 0; a < order; ++a) {
    std::optional<Elem> inv;
    for (Elem b = 0; b < order && !inv; ++b)
      if (at(a, b) == *identity && at(b, a) == *identity) inv = b;
    if (!inv) fail(ErrKind::invalid_table, "element without two-sided inverse");
    inverses[a] = *inv;
  }

  // Associativity: exhaustive up to the cap, seeded sampling beyond it.
  auto check_triple = [&](Elem a, Elem b, Elem c) {
    if (at(at(a, b), c) != at(a, at(b, c)))
      fail(ErrKind::invalid_table, "associativity fails");
  };
  if (order <= caps.full_validation_cap) {
    const Elem* t = table.data();
    for (Elem a = 0; a < order; ++a) {
      const Elem* row_a = t + static_cast<std::size_t>(a) * order;
      for (Elem b = 0; b < order; ++b) {
        const Elem* row_ab = t + static_cast<std::size_t>(row_a[b]) * order;
        const Elem* row_b = t + static_cast<std::size_t>(b) * order;
        for (Elem c = 0; c < order; ++c)
          if (row_ab[c] != row_a[row_b[c]])
            fail(ErrKind::invalid_table, "associativity fails");
      }
    }
  } else {
    std::mt19937_64 rng(caps.seed);
    std::uniform_int_distribution<Elem> pick(0, order - 1);
    for (std::size_t i = 0; i < caps.sampled_triples; ++i)
      check_triple(pick(rng), pick(rng), pick(rng));
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = order;
  g->identity_ = *identity;
  g->table_ = std::move(table);
  g->inverses_ = std::move(inverses);
  g->labels_ = std::move(labels);
  return g;
}

Elem FiniteGroup::element_order(Elem a) const {
  Elem n = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++n;
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::label(Elem i) const {
  if (!labels_.empty()) return labels_[i];
  return "g" + std::to_string(i);
}

SubgroupSet SubgroupSet::create(GroupPtr parent, std::vector<Elem> members) {
  if (!parent) fail(ErrKind::invalid_parameter, "subgroup needs a parent group");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) fail(ErrKind::not_subgroup, "subgroup cannot be empty");
  for (Elem m : members)
    if (m >= parent->order()) fail(ErrKind::not_subgroup, "member index out of range");

  DenseSet bits = DenseSet::from_members(parent->order(), members);
  if (!bits.test(parent->identity())) fail(ErrKind::not_subgroup, "identity missing");
  for (Elem a : members) {
    if (!bits.test(parent->inv(a))) fail(ErrKind::not_subgroup, "not closed under inverse");
    for (Elem b : members)
      if (!bits.test(parent->mul(a, b))) fail(ErrKind::not_subgroup, "not closed under product");
  }

  SubgroupSet s;
  s.parent_ = std::move(parent);
  s.members_ = std::move(members);
  return s;
}

SubgroupSet SubgroupSet::unchecked(GroupPtr parent, std::vector<Elem> members) {
  SubgroupSet s;
  s.parent_ = std::move(parent);
  s.members_ = std::move(members);
  return s;
}

SubgroupSet SubgroupSet::whole(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  std::iota(all.begin(), all.end(), 0u);
  return unchecked(std::move(parent), std::move(all));
}

SubgroupSet SubgroupSet::trivial(GroupPtr parent) {
  Elem e = parent->identity();
  return unchecked(std::move(parent), {e});
}

bool SubgroupSet::contains(Elem x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool SubgroupSet::is_abelian() const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j)
      if (!parent_->commutes(members_[i], members_[j])) return false;
  return true;
}

bool SubgroupSet::is_normal() const {
  DenseSet bits = to_set();
  for (Elem g = 0; g < parent_->order(); ++g)
    for (Elem m : members_)
      if (!bits.test(parent_->conj(g, m))) return false;
  return true;
}

GroupPtr SubgroupSet::as_group() const {
  const Elem k = static_cast<Elem>(members_.size());
  std::vector<Elem> to_local(parent_->order(), 0);
  for (Elem i = 0; i < k; ++i) to_local[members_[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j)
      table[static_cast<std::size_t>(i) * k + j] = to_local[parent_->mul(members_[i], members_[j])];
  std::vector<std::string> labels;
  labels.reserve(k);
  for (Elem i = 0; i < k; ++i) labels.push_back(parent_->label(members_[i]));
  return FiniteGroup::create(k, std::move(table), std::move(labels));
}

GroupHomomorphism GroupHomomorphism::create(GroupPtr source, GroupPtr target,
                                            std::vector<Elem> map) {
  if (!source || !target) fail(ErrKind::invalid_parameter, "homomorphism needs both groups");
  if (map.size() != source->order())
    fail(ErrKind::invalid_parameter, "map size does not match source order");
  for (Elem v : map)
    if (v >= target->order()) fail(ErrKind::invalid_parameter, "map value out of range");
  for (Elem a = 0; a < source->order(); ++a)
    for (Elem b = 0; b < source->order(); ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
        fail(ErrKind::invalid_parameter, "map is not a homomorphism");

  GroupHomomorphism h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.map_ = std::move(map);
  return h;
}

SubgroupSet GroupHomomorphism::kernel() const {
  std::vector<Elem> ker;
  for (Elem x = 0; x < source_->order(); ++x)
    if (map_[x] == target_->identity()) ker.push_back(x);
  return SubgroupSet::unchecked(source_, std::move(ker));
}

SubgroupSet GroupHomomorphism::image() const {
  DenseSet seen(target_->order());
  for (Elem v : map_) seen.set(v);
  return SubgroupSet::unchecked(target_, seen.members());
}

bool GroupHomomorphism::is_bijective() const {
  return source_->order() == target_->order() && image().size() == target_->order();
}

SubgroupSet center_of(const GroupPtr& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g->order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g->order() && central; ++y) central = g->commutes(x, y);
    if (central) z.push_back(x);
  }
  return SubgroupSet::unchecked(g, std::move(z));
}

StructureReport structure_report(const GroupPtr& g) {
  StructureReport r;
  r.order = g->order();
  r.center = center_of(g);
  r.abelian = r.center.size() == g->order();
  r.exponent = 1;
  for (Elem x = 0; x < g->order(); ++x) {
    Elem k = g->element_order(x);
    r.order_histogram[k] += 1;
    r.exponent = std::lcm(r.exponent, static_cast<std::uint64_t>(k));
  }
  return r;
}

}  // namespace jk
