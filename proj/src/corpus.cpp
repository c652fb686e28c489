#include "jk/corpus.hpp"

#include <algorithm>
#include <map>

#include "jk/error.hpp"
#include "jk/group_io.hpp"
#include "jk/group_ops.hpp"
#include "jk/jordan.hpp"

namespace jk {
namespace {

// x -> x^k on N's element indices, iterated for each power of the cyclic
// acting group: action[j] = (x -> x^(k^j)).
std::vector<Permutation> power_action(const GroupPtr& n, std::uint32_t h_order, std::uint32_t k) {
  std::vector<std::uint32_t> base(n->order());
  for (Elem x = 0; x < n->order(); ++x) {
    Elem y = n->identity();
    for (std::uint32_t i = 0; i < k; ++i) y = n->mul(y, x);
    base[x] = y;
  }
  Permutation step = Permutation::from_images(base);
  std::vector<Permutation> action{Permutation(n->order())};
  for (std::uint32_t j = 1; j < h_order; ++j) action.push_back(step * action.back());
  return action;
}

// x -> x^-1; an automorphism exactly when N is abelian.
std::vector<Permutation> inversion_action(const GroupPtr& n) {
  std::vector<std::uint32_t> images(n->order());
  for (Elem x = 0; x < n->order(); ++x) images[x] = n->inv(x);
  return {Permutation(n->order()), Permutation::from_images(images)};
}

struct BuiltEntry {
  std::string name;
  GroupSpec spec;
  GroupPtr group;
  std::optional<SemidirectProduct> split;
};

std::string slug(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (isalnum(static_cast<unsigned char>(c)))
      out += static_cast<char>(tolower(static_cast<unsigned char>(c)));
    else if (!out.empty() && out.back() != '-')
      out += '-';
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

GroupSpec cayley_spec_of(const GroupPtr& g) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::cayley_table;
  s.order = g->order();
  s.table = g->table();
  s.labels = g->labels();
  return s;
}

std::vector<BuiltEntry> build_entries(const Caps& caps) {
  std::vector<BuiltEntry> entries;
  auto add_family = [&](std::string family, std::vector<std::uint32_t> params) {
    GroupSpec spec = GroupSpec::for_family(std::move(family), std::move(params));
    entries.push_back({spec.summary(), spec, from_spec(spec, caps), std::nullopt});
  };
  add_family("cyclic", {1});
  add_family("cyclic", {2});
  add_family("cyclic", {3});
  add_family("cyclic", {4});
  add_family("cyclic", {6});
  add_family("cyclic", {8});
  add_family("cyclic", {12});
  add_family("dihedral", {8});
  add_family("dihedral", {10});
  add_family("dihedral", {12});
  add_family("quaternion", {8});
  add_family("quaternion", {16});
  add_family("abelian", {2, 2});
  add_family("abelian", {2, 4});
  add_family("abelian", {2, 2, 2});
  add_family("abelian", {3, 3});
  add_family("symmetric", {3});
  add_family("symmetric", {4});
  add_family("symmetric", {5});
  add_family("alternating", {4});
  add_family("alternating", {5});
  add_family("binary_icosahedral", {});
  add_family("zarhin", {2});
  add_family("zarhin", {3});
  add_family("zarhin", {2, 2});

  auto add_split = [&](std::string name, const GroupPtr& n, const GroupPtr& h,
                       const std::vector<Permutation>& action) {
    SemidirectProduct sp = semidirect_product(n, h, action, caps);
    entries.push_back({std::move(name), cayley_spec_of(sp.group), sp.group, sp});
  };
  add_split("C4:C2-inv", cyclic_group(4, caps), cyclic_group(2, caps),
            inversion_action(cyclic_group(4, caps)));
  add_split("C8:C2-pow3", cyclic_group(8, caps), cyclic_group(2, caps),
            power_action(cyclic_group(8, caps), 2, 3));
  add_split("C5:C4-pow2", cyclic_group(5, caps), cyclic_group(4, caps),
            power_action(cyclic_group(5, caps), 4, 2));
  add_split("C7:C3-pow2", cyclic_group(7, caps), cyclic_group(3, caps),
            power_action(cyclic_group(7, caps), 3, 2));
  add_split("C9:C3-pow4", cyclic_group(9, caps), cyclic_group(3, caps),
            power_action(cyclic_group(9, caps), 3, 4));
  add_split("C3xC3:C2-inv", abelian_group({3, 3}, caps), cyclic_group(2, caps),
            inversion_action(abelian_group({3, 3}, caps)));
  {
    // Q8 x| C3: the order-3 automorphism cycling a -> b -> ab.
    GroupPtr q8 = quaternion_group(8, caps);
    Permutation sigma = Permutation::from_images({0, 4, 2, 6, 5, 1, 7, 3});
    add_split("Q8:C3-cycle", q8, cyclic_group(3, caps),
              {Permutation(8), sigma, sigma * sigma});
  }
  return entries;
}

const std::vector<std::string>& product_seed_names() {
  static const std::vector<std::string> names{
      "cyclic(2)", "cyclic(3)", "cyclic(4)", "abelian(2,2)",
      "symmetric(3)", "dihedral(8)", "quaternion(8)"};
  return names;
}

// Deterministic selection of at most `limit` items, evenly spread.
template <class T>
std::vector<const T*> spread_select(const std::vector<T>& items, std::size_t limit) {
  std::vector<const T*> out;
  if (items.size() <= limit) {
    for (const auto& i : items) out.push_back(&i);
    return out;
  }
  for (std::size_t k = 0; k < limit; ++k) out.push_back(&items[k * items.size() / limit]);
  return out;
}

}  // namespace

std::vector<CheckRecord> run_group_checks(const GroupPtr& g, const std::string& name,
                                          const Caps& caps) {
  std::vector<CheckRecord> out = check_gs_theorem(g, name, caps);

  auto normals = enumerate_normal_subgroups(g, caps);
  std::vector<SubgroupSet> proper;
  for (const auto& n : normals)
    if (n.size() > 1 && n.size() < g->order()) proper.push_back(n);

  constexpr std::size_t kNormalLimit = 12;
  for (const SubgroupSet* n : spread_select(proper, kNormalLimit)) {
    std::string input = name + " / N order " + std::to_string(n->size());
    out.push_back(check_extension_bound(g, *n, input, caps));
    try {
      out.push_back(check_centerless_bound(g, *n, input, caps));
    } catch (const Error& e) {
      if (e.kind() != ErrKind::center_not_trivial && e.kind() != ErrKind::cap_exceeded) throw;
      out.push_back(make_skip("centerless-bound", input, e.what()));
    }
    // Conjugate-intersection bound with A = the best normal abelian subgroup
    // of L (in parent coordinates).
    NormalAbelianIndex na = min_normal_abelian_index(n->as_group(), caps);
    std::vector<Elem> a_members;
    a_members.reserve(na.witness.size());
    for (Elem local : na.witness.members()) a_members.push_back(n->members()[local]);
    out.push_back(check_intersection_bound(g, *n, SubgroupSet::unchecked(g, std::move(a_members)),
                                  input + " / A order " + std::to_string(na.witness.size())));
  }

  auto classes = enumerate_subgroup_classes(g, caps);
  std::vector<SubgroupSet> small_index;
  for (const auto& cls : classes) {
    std::size_t index = g->order() / cls.representative.size();
    if (index >= 2 && index <= 8) small_index.push_back(cls.representative);
  }
  for (const SubgroupSet* q : spread_select(small_index, kNormalLimit))
    out.push_back(check_core_bound(
        *q, name + " / Q index " + std::to_string(g->order() / q->size())));

  return out;
}

const std::vector<std::vector<std::uint32_t>>& zarhin_chains() {
  static const std::vector<std::vector<std::uint32_t>> chains{
      {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}};
  return chains;
}

std::vector<CheckRecord> run_zarhin_suite(const Caps& caps, std::uint64_t factors_max) {
  std::vector<CheckRecord> out;
  for (const auto& chain : zarhin_chains()) {
    std::uint64_t k_order = 1;
    for (std::uint32_t d : chain) k_order *= d;
    if (factors_max != 0 && k_order > factors_max) continue;
    out.push_back(check_zarhin_index(chain, caps));
  }
  return out;
}

CorpusManifest materialize_default_corpus(const std::filesystem::path& dir, const Caps& caps) {
  std::filesystem::create_directories(dir);
  auto entries = build_entries(caps);
  CorpusManifest m;
  for (const auto& e : entries) {
    std::string file = slug(e.name) + ".group.json";
    write_group_file(dir / file, e.spec);
    m.groups.push_back({e.name, file});
    if (e.split) {
      m.splits.push_back(
          {e.name, e.split->normal_part.members(), e.split->complement.members()});
    }
  }
  for (std::size_t i = 0; i < product_seed_names().size(); ++i)
    for (std::size_t j = i; j < product_seed_names().size(); ++j)
      m.products.push_back({product_seed_names()[i], product_seed_names()[j]});
  m.expected_jordan = {
      {"cyclic(12)", 1},   {"abelian(2,2,2)", 1}, {"quaternion(8)", 2},
      {"dihedral(8)", 2},  {"symmetric(3)", 2},   {"symmetric(4)", 6},
      {"symmetric(5)", 120}, {"alternating(5)", 60}, {"binary_icosahedral()", 60},
  };
  write_manifest(dir / "manifest.json", m);
  return m;
}

std::vector<CheckRecord> run_manifest_suite(const CorpusManifest& manifest,
                                            const std::filesystem::path& base_dir,
                                            const Caps& caps) {
  // Load every group up front; any unparseable file aborts the run (exit 2
  // territory, not a failed check).
  std::map<std::string, GroupPtr> groups;
  std::vector<CheckRecord> out;
  for (const auto& g : manifest.groups) {
    GroupSpec spec = read_group_file(base_dir / g.path);
    groups.emplace(g.name, from_spec(spec, caps));
  }
  auto lookup = [&](const std::string& name) -> const GroupPtr& {
    auto it = groups.find(name);
    if (it == groups.end())
      fail(ErrKind::parse_error, "manifest references unknown group '" + name + "'");
    return it->second;
  };

  for (const auto& g : manifest.groups) {
    auto recs = run_group_checks(lookup(g.name), g.name, caps);
    out.insert(out.end(), std::make_move_iterator(recs.begin()),
               std::make_move_iterator(recs.end()));
  }
  for (const auto& p : manifest.products) {
    auto recs = check_product_bounds(lookup(p.left), lookup(p.right), p.left, p.right, caps);
    out.insert(out.end(), std::make_move_iterator(recs.begin()),
               std::make_move_iterator(recs.end()));
  }
  for (const auto& s : manifest.splits) {
    const GroupPtr& g = lookup(s.group);
    // Re-validate the splitting from the serialized member lists.
    SubgroupSet n = SubgroupSet::create(g, s.normal);
    SubgroupSet h = SubgroupSet::create(g, s.complement);
    if (!n.is_normal())
      fail(ErrKind::not_normal, "manifest split: normal part is not normal in " + s.group);
    if (n.size() * h.size() != g->order())
      fail(ErrKind::invalid_parameter, "manifest split: |N||H| != |G| for " + s.group);
    std::size_t common = 0;
    for (Elem x : h.members())
      if (n.contains(x)) ++common;
    if (common != 1)
      fail(ErrKind::invalid_parameter, "manifest split: N and H overlap beyond the identity");
    SemidirectProduct sp{g, n, h};
    out.push_back(check_split_bound(sp, s.group, caps));
  }
  for (const auto& [name, expected] : manifest.expected_jordan) {
    AnalysisReport r = jordan_constant(lookup(name), caps);
    auto rec = make_check("expected-jordan", name, BigInt(r.jordan_constant), BigInt(expected),
                          CheckRelation::eq);
    rec.quantities.emplace_back("computed", BigInt(r.jordan_constant));
    rec.quantities.emplace_back("expected", BigInt(expected));
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace jk
