#include "jk/checks.hpp"

#include <algorithm>
#include <sstream>

#include "jk/constructions.hpp"
#include "jk/error.hpp"
#include "jk/isomorphism.hpp"
#include "jk/jordan.hpp"

namespace jk {
namespace {

std::string member_summary(const std::vector<Elem>& members) {
  std::ostringstream os;
  os << "order " << members.size() << " {";
  for (std::size_t i = 0; i < members.size() && i < 8; ++i) os << (i ? "," : "") << members[i];
  if (members.size() > 8) os << ",...";
  os << '}';
  return os.str();
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

CheckRecord make_check(std::string check_id, std::string input, BigInt lhs, BigInt rhs,
                       CheckRelation relation) {
  CheckRecord r;
  r.check_id = std::move(check_id);
  r.input = std::move(input);
  r.relation = relation;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  bool ok = relation == CheckRelation::le ? r.lhs <= r.rhs : r.lhs == r.rhs;
  r.status = ok ? CheckStatus::passed : CheckStatus::failed;
  return r;
}

CheckRecord make_skip(std::string check_id, std::string input, std::string reason) {
  CheckRecord r;
  r.check_id = std::move(check_id);
  r.input = std::move(input);
  r.status = CheckStatus::skipped;
  r.skip_reason = std::move(reason);
  return r;
}

std::vector<CheckRecord> check_gs_theorem(const GroupPtr& g, std::string_view name,
                                          const Caps& caps) {
  std::vector<CheckRecord> out;
  AnalysisReport whole = jordan_constant(g, caps);
  auto classes = enumerate_subgroup_classes(g, caps);
  for (const auto& cls : classes) {
    AnalysisReport sub = jordan_constant(cls.representative.as_group(), caps);
    std::string input = std::string(name) + " / K " + member_summary(cls.representative.members());
    auto rec = make_check("gs-subgroup", std::move(input), BigInt(sub.jordan_constant),
                          BigInt(whole.jordan_constant));
    rec.quantities.emplace_back("j_subgroup", BigInt(sub.jordan_constant));
    rec.quantities.emplace_back("j_group", BigInt(whole.jordan_constant));
    rec.witnesses.emplace_back("subgroup", cls.representative.members());
    out.push_back(std::move(rec));
  }
  for (const auto& n : enumerate_normal_subgroups(g, caps)) {
    AnalysisReport quot = jordan_constant(quotient_group(g, n).group, caps);
    std::string input = std::string(name) + " / N " + member_summary(n.members());
    auto rec = make_check("gs-quotient", std::move(input), BigInt(quot.jordan_constant),
                          BigInt(whole.jordan_constant));
    rec.quantities.emplace_back("j_quotient", BigInt(quot.jordan_constant));
    rec.quantities.emplace_back("j_group", BigInt(whole.jordan_constant));
    rec.witnesses.emplace_back("normal_subgroup", n.members());
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CheckRecord> check_product_bounds(const GroupPtr& a, const GroupPtr& b,
                                              std::string_view name_a, std::string_view name_b,
                                              const Caps& caps) {
  GroupPtr prod = direct_product(a, b, caps);
  std::uint64_t ja = jordan_constant(a, caps).jordan_constant;
  std::uint64_t jb = jordan_constant(b, caps).jordan_constant;
  std::uint64_t jp = jordan_constant(prod, caps).jordan_constant;
  std::string input = std::string(name_a) + " x " + std::string(name_b);

  std::vector<CheckRecord> out;
  auto lower = make_check("product-lower", input, BigInt(std::max(ja, jb)), BigInt(jp));
  auto upper = make_check("product-upper", input, BigInt(jp), BigInt(ja) * BigInt(jb));
  for (auto* rec : {&lower, &upper}) {
    rec->quantities.emplace_back("j_left", BigInt(ja));
    rec->quantities.emplace_back("j_right", BigInt(jb));
    rec->quantities.emplace_back("j_product", BigInt(jp));
  }
  out.push_back(std::move(lower));
  out.push_back(std::move(upper));
  return out;
}

CheckRecord check_split_bound(const SemidirectProduct& sp, std::string_view name,
                              const Caps& caps) {
  std::uint64_t jg = jordan_constant(sp.group, caps).jordan_constant;
  Quotient q = quotient_group(sp.group, sp.normal_part);
  std::uint64_t jq = jordan_constant(q.group, caps).jordan_constant;
  if (q.group->order() != sp.complement.size())
    throw std::logic_error("split extension: complement order differs from quotient order");
  auto rec = make_check("gs-split", std::string(name), BigInt(jq), BigInt(jg));
  rec.quantities.emplace_back("j_quotient", BigInt(jq));
  rec.quantities.emplace_back("j_group", BigInt(jg));
  rec.witnesses.emplace_back("complement", sp.complement.members());
  return rec;
}

CheckRecord check_extension_bound(const GroupPtr& g, const SubgroupSet& h, std::string_view name,
                                  const Caps& caps) {
  if (h.parent().get() != g.get())
    fail(ErrKind::invalid_parameter, "subgroup belongs to a different group");
  if (!h.is_normal()) fail(ErrKind::not_normal, "H must be normal in G");
  std::uint64_t jg = jordan_constant(g, caps).jordan_constant;
  std::uint64_t jh = jordan_constant(h.as_group(), caps).jordan_constant;
  std::uint64_t b = g->order() / h.size();  // b_{G/H} = |G/H|
  BigInt rhs = BigInt(b) * big_pow(BigInt(jh), static_cast<unsigned long>(b));
  auto rec = make_check("extension-bound", std::string(name), BigInt(jg), rhs);
  rec.quantities.emplace_back("j_group", BigInt(jg));
  rec.quantities.emplace_back("j_normal", BigInt(jh));
  rec.quantities.emplace_back("b_quotient", BigInt(b));
  rec.witnesses.emplace_back("normal_subgroup", h.members());
  return rec;
}

CheckRecord check_centerless_bound(const GroupPtr& g, const SubgroupSet& h, std::string_view name,
                                   const Caps& caps) {
  if (h.parent().get() != g.get())
    fail(ErrKind::invalid_parameter, "subgroup belongs to a different group");
  if (!h.is_normal()) fail(ErrKind::not_normal, "H must be normal in G");
  GroupPtr hg = h.as_group();
  if (center_of(hg).size() != 1)
    fail(ErrKind::center_not_trivial, "H must have trivial center");
  AutomorphismGroup aut = automorphism_group(hg, caps);
  std::uint64_t aut_order = aut.group->order();
  std::uint64_t jg = jordan_constant(g, caps).jordan_constant;
  std::uint64_t jq = jordan_constant(quotient_group(g, h).group, caps).jordan_constant;
  BigInt rhs = BigInt(aut_order) * big_pow(BigInt(jq), static_cast<unsigned long>(aut_order));
  auto rec = make_check("centerless-bound", std::string(name), BigInt(jg), rhs);
  rec.quantities.emplace_back("j_group", BigInt(jg));
  rec.quantities.emplace_back("j_quotient", BigInt(jq));
  rec.quantities.emplace_back("aut_order", BigInt(aut_order));
  rec.witnesses.emplace_back("normal_subgroup", h.members());
  return rec;
}

CheckRecord check_core_bound(const SubgroupSet& q, std::string_view name) {
  SubgroupSet core = normal_core(q);
  std::uint64_t index_q = q.index();
  std::uint64_t index_core = q.parent()->order() / core.size();
  auto rec = make_check("core-bound", std::string(name), BigInt(index_core),
                        big_factorial(index_q));
  rec.quantities.emplace_back("index_subgroup", BigInt(index_q));
  rec.quantities.emplace_back("index_core", BigInt(index_core));
  rec.witnesses.emplace_back("core", core.members());
  return rec;
}

CheckRecord check_intersection_bound(const GroupPtr& f, const SubgroupSet& l, const SubgroupSet& a,
                            std::string_view name) {
  SubgroupSet m = intersect_conjugates(f, l, a);
  std::uint64_t index_la = l.size() / a.size();
  std::uint64_t index_fl = f->order() / l.size();
  auto rec = make_check("intersection-bound", std::string(name), BigInt(l.size() / m.size()),
                        big_pow(BigInt(index_la), static_cast<unsigned long>(index_fl)));
  rec.quantities.emplace_back("index_l_a", BigInt(index_la));
  rec.quantities.emplace_back("index_f_l", BigInt(index_fl));
  rec.quantities.emplace_back("index_l_m", BigInt(l.size() / m.size()));
  rec.witnesses.emplace_back("intersection", m.members());
  return rec;
}

CheckRecord check_zarhin_index(const std::vector<std::uint32_t>& invariant_factors,
                               const Caps& caps) {
  GroupPtr q = zarhin_group(invariant_factors, caps);
  std::uint64_t n = 1;
  for (auto d : invariant_factors) n *= d;
  AbelianIndex ai = min_abelian_index(q, caps);
  GroupSpec spec = GroupSpec::for_family("zarhin", invariant_factors);
  auto rec = make_check("zarhin-index", spec.summary(), BigInt(n), BigInt(ai.index));
  rec.quantities.emplace_back("group_order", BigInt(q->order()));
  rec.quantities.emplace_back("min_abelian_index", BigInt(ai.index));
  rec.witnesses.emplace_back("best_abelian", ai.witness.members());
  return rec;
}

}  // namespace jk
