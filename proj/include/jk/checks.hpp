#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jk/bigint.hpp"
#include "jk/finite_group.hpp"
#include "jk/group_ops.hpp"

namespace jk {

enum class CheckStatus { passed, failed, skipped };
const char* to_string(CheckStatus s);

enum class CheckRelation { le, eq };

/// One machine-checked inequality instance. `status` is always recomputable
/// from lhs/rhs/relation alone (skipped records carry no comparison, only a
/// reason), so a reader can re-verify every record offline.
struct CheckRecord {
  std::string check_id;
  std::string input;  // which group(s)/subgroup(s) the instance ran on
  CheckStatus status = CheckStatus::passed;
  std::string skip_reason;
  CheckRelation relation = CheckRelation::le;
  BigInt lhs, rhs;
  std::vector<std::pair<std::string, BigInt>> quantities;          // named extras
  std::vector<std::pair<std::string, std::vector<Elem>>> witnesses;  // member lists

  bool passed() const { return status == CheckStatus::passed; }
  /// Recomputes passed/failed from the recorded comparison.
  bool recheck() const {
    if (status == CheckStatus::skipped) return true;
    return relation == CheckRelation::le ? lhs <= rhs : lhs == rhs;
  }
};

CheckRecord make_check(std::string check_id, std::string input, BigInt lhs, BigInt rhs,
                       CheckRelation relation = CheckRelation::le);
CheckRecord make_skip(std::string check_id, std::string input, std::string reason);

/// Monotonicity of J under subgroups and quotients:
///  - "gs-subgroup": J_K <= J_G for every subgroup-class representative K;
///  - "gs-quotient": J_{G/N} <= J_G for every normal subgroup N.
std::vector<CheckRecord> check_gs_theorem(const GroupPtr& g, std::string_view name,
                                          const Caps& caps = {});

/// Two-sided product bounds, "product-lower" and "product-upper":
///   max(J_{G1}, J_{G2}) <= J_{G1 x G2} <= J_{G1} * J_{G2}.
std::vector<CheckRecord> check_product_bounds(const GroupPtr& a, const GroupPtr& b,
                                              std::string_view name_a, std::string_view name_b,
                                              const Caps& caps = {});

/// "gs-split": for a split extension G = N x| H, J_{G/N} <= J_G (the
/// complement witnesses the splitting).
CheckRecord check_split_bound(const SemidirectProduct& sp, std::string_view name,
                              const Caps& caps = {});

/// "extension-bound": J_G <= b * J_H^b with b = |G/H|, for H normal in G.
/// The right side is never smaller than J_{G/H} (b alone already dominates it).
CheckRecord check_extension_bound(const GroupPtr& g, const SubgroupSet& h, std::string_view name,
                                  const Caps& caps = {});

/// "centerless-bound": for H normal in G with trivial center,
///   J_G <= |Aut(H)| * J_{G/H}^{|Aut(H)|}.
/// ErrKind::center_not_trivial when the precondition fails.
CheckRecord check_centerless_bound(const GroupPtr& g, const SubgroupSet& h, std::string_view name,
                                   const Caps& caps = {});

/// "core-bound": [P : core_P(Q)] <= [P : Q]! via the coset-action embedding.
CheckRecord check_core_bound(const SubgroupSet& q, std::string_view name);

/// "intersection-bound": [L : M] <= [L : A]^[F:L] for M the intersection of the
/// F-conjugates of A (A normal abelian in L, L normal in F).
CheckRecord check_intersection_bound(const GroupPtr& f, const SubgroupSet& l, const SubgroupSet& a,
                            std::string_view name);

/// "zarhin-index": |K| <= min_abelian_index(Q_K) — no abelian subgroup of the
/// constructed central extension beats index |K|.
CheckRecord check_zarhin_index(const std::vector<std::uint32_t>& invariant_factors,
                               const Caps& caps = {});

}  // namespace jk
