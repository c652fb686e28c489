#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jk/caps.hpp"
#include "jk/dense_set.hpp"

namespace jk {

using Elem = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Exact finite group given by its full multiplication table. Element indices
/// are the only identity elements have; labels are display-only. Instances are
/// immutable and shared via GroupPtr.
///
/// Construction validates the group axioms: identity, inverses, row/column
/// bijectivity, and associativity — all |G|^3 triples up to
/// Caps::full_validation_cap, seeded random triples beyond it. A violation is
/// ErrKind::invalid_table, never a wrong answer later.
class FiniteGroup {
 public:
  /// `table` is row-major, table[a*order+b] = a*b. Labels optional (empty or
  /// size == order).
  static GroupPtr create(Elem order, std::vector<Elem> table,
                         std::vector<std::string> labels = {}, const Caps& caps = {});

  Elem order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverses_[a]; }
  Elem identity() const { return identity_; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  std::span<const Elem> row(Elem a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  const std::vector<Elem>& table() const { return table_; }

  /// Multiplicative order of an element.
  Elem element_order(Elem a) const;
  bool commutes(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;

  /// Display label; falls back to "g<i>" when no labels were provided.
  std::string label(Elem i) const;
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  FiniteGroup() = default;

  Elem order_ = 0;
  Elem identity_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverses_;
  std::vector<std::string> labels_;
};

/// Subgroup of a parent group, stored as the strictly increasing list of
/// member indices. Keeps the parent alive.
class SubgroupSet {
 public:
  SubgroupSet() = default;

  /// Validates subgroup-ness (identity, products, inverses);
  /// ErrKind::not_subgroup on failure. Members may arrive unsorted.
  static SubgroupSet create(GroupPtr parent, std::vector<Elem> members);

  /// Trusted fast path for engine-computed member sets that are closed by
  /// construction. Members must be sorted and form a subgroup.
  static SubgroupSet unchecked(GroupPtr parent, std::vector<Elem> members);

  static SubgroupSet whole(GroupPtr parent);
  static SubgroupSet trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  /// [G : this].
  std::size_t index() const { return parent_->order() / members_.size(); }
  bool contains(Elem x) const;
  bool is_abelian() const;
  bool is_normal() const;  // in the parent
  DenseSet to_set() const {
    return DenseSet::from_members(parent_->order(), members_);
  }

  /// The subgroup as a standalone group: induced table on the members (in
  /// member order), labels inherited. Second result maps new index -> parent
  /// element index (i.e. members()).
  GroupPtr as_group() const;

  bool operator==(const SubgroupSet& o) const { return members_ == o.members_; }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
};

/// Group homomorphism as the full image table on source elements.
/// Construction verifies map(x*y) == map(x)*map(y) on all pairs.
class GroupHomomorphism {
 public:
  GroupHomomorphism() = default;
  static GroupHomomorphism create(GroupPtr source, GroupPtr target, std::vector<Elem> map);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  Elem operator()(Elem x) const { return map_[x]; }
  const std::vector<Elem>& map() const { return map_; }

  SubgroupSet kernel() const;
  SubgroupSet image() const;
  bool is_bijective() const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> map_;
};

/// Basic structural facts in one pass.
struct StructureReport {
  Elem order = 0;
  bool abelian = false;
  SubgroupSet center;
  std::uint64_t exponent = 0;
  /// element order -> number of elements of that order
  std::map<Elem, Elem> order_histogram;
};

StructureReport structure_report(const GroupPtr& g);

/// Center of g as a SubgroupSet.
SubgroupSet center_of(const GroupPtr& g);

}  // namespace jk
