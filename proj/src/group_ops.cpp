#include "jk/group_ops.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "jk/bigint.hpp"
#include "jk/error.hpp"

namespace jk {
namespace {

// Breadth-first closure in canonical order: level by level from the identity,
// each new level sorted before it gets indices.
template <class T, class Hash, class MulFn>
std::vector<T> bfs_closure(const T& id, const std::vector<T>& gens, MulFn mul, std::size_t cap) {
  std::vector<T> elements{id};
  std::unordered_set<T, Hash> seen{id};
  std::vector<T> level{id};
  while (!level.empty()) {
    std::vector<T> next;
    for (const T& x : level)
      for (const T& g : gens) {
        T y = mul(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    std::sort(next.begin(), next.end());
    elements.insert(elements.end(), next.begin(), next.end());
    if (cap && elements.size() > cap)
      fail(ErrKind::cap_exceeded,
           "generator closure exceeds cap of " + std::to_string(cap) + " elements");
    level = std::move(next);
  }
  return elements;
}

template <class T, class Hash, class MulFn, class LabelFn>
GroupPtr group_from_elements(const std::vector<T>& elems, MulFn mul, LabelFn label,
                             const Caps& caps) {
  const Elem n = static_cast<Elem>(elems.size());
  std::unordered_map<T, Elem, Hash> index;
  index.reserve(elems.size());
  for (Elem i = 0; i < n; ++i) index.emplace(elems[i], i);
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = index.at(mul(elems[i], elems[j]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Elem i = 0; i < n; ++i) labels.push_back(label(elems[i]));
  return FiniteGroup::create(n, std::move(table), std::move(labels), caps);
}

// dim x dim matrix over F_p, row-major.
struct FMat {
  std::uint32_t dim = 0, p = 0;
  std::vector<std::uint32_t> v;
  bool operator==(const FMat&) const = default;
  bool operator<(const FMat& o) const { return v < o.v; }
  struct Hash {
    std::size_t operator()(const FMat& m) const {
      std::uint64_t h = 1469598103934665603ull;
      for (auto x : m.v) {
        h ^= x;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };
};

FMat mat_mul(const FMat& a, const FMat& b) {
  FMat out{a.dim, a.p, std::vector<std::uint32_t>(a.v.size(), 0)};
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t k = 0; k < a.dim; ++k) {
      std::uint64_t aik = a.v[i * a.dim + k];
      if (!aik) continue;
      for (std::uint32_t j = 0; j < a.dim; ++j)
        out.v[i * a.dim + j] =
            static_cast<std::uint32_t>((out.v[i * a.dim + j] + aik * b.v[k * a.dim + j]) % a.p);
    }
  return out;
}

std::string mat_label(const FMat& m) {
  std::ostringstream os;
  os << '[';
  for (std::uint32_t i = 0; i < m.dim; ++i) {
    os << (i ? ",[" : "[");
    for (std::uint32_t j = 0; j < m.dim; ++j) os << (j ? "," : "") << m.v[i * m.dim + j];
    os << ']';
  }
  os << ']';
  return os.str();
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint64_t b, std::uint32_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

bool mat_invertible(const FMat& m) {
  FMat a = m;  // Gaussian elimination mod p
  const std::uint32_t d = a.dim, p = a.p;
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t pivot = col;
    while (pivot < d && a.v[pivot * d + col] == 0) ++pivot;
    if (pivot == d) return false;
    if (pivot != col)
      for (std::uint32_t j = 0; j < d; ++j) std::swap(a.v[pivot * d + j], a.v[col * d + j]);
    std::uint64_t inv = mod_pow(a.v[col * d + col], p - 2, p);
    for (std::uint32_t j = 0; j < d; ++j)
      a.v[col * d + j] = static_cast<std::uint32_t>(a.v[col * d + j] * inv % p);
    for (std::uint32_t i = 0; i < d; ++i) {
      if (i == col || a.v[i * d + col] == 0) continue;
      std::uint64_t f = a.v[i * d + col];
      for (std::uint32_t j = 0; j < d; ++j)
        a.v[i * d + j] =
            static_cast<std::uint32_t>((a.v[i * d + j] + (p - 1ull) * f % p * a.v[col * d + j]) % p);
    }
  }
  return true;
}

}  // namespace

GroupPtr close_generators(std::uint32_t degree, const std::vector<Permutation>& generators,
                          const Caps& caps) {
  if (degree == 0) fail(ErrKind::invalid_parameter, "degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree)
      fail(ErrKind::degree_mismatch, "generator degree does not match the stated degree");
  auto elems = bfs_closure<Permutation, Permutation::Hash>(
      Permutation(degree), generators, [](const Permutation& a, const Permutation& b) { return a * b; },
      caps.closure_cap);
  return group_from_elements<Permutation, Permutation::Hash>(
      elems, [](const Permutation& a, const Permutation& b) { return a * b; },
      [](const Permutation& p) { return p.cycle_string(); }, caps);
}

GroupPtr matrix_group_over_prime_field(std::uint32_t dim, std::uint32_t p,
                                       const std::vector<std::vector<std::uint32_t>>& generators,
                                       const Caps& caps) {
  if (dim == 0) fail(ErrKind::invalid_parameter, "matrix dimension must be positive");
  if (!is_prime(p)) fail(ErrKind::invalid_parameter, "field characteristic must be prime");
  std::vector<FMat> gens;
  gens.reserve(generators.size());
  for (const auto& raw : generators) {
    if (raw.size() != static_cast<std::size_t>(dim) * dim)
      fail(ErrKind::invalid_parameter, "matrix generator has wrong entry count");
    FMat m{dim, p, raw};
    for (auto& x : m.v) x %= p;
    if (!mat_invertible(m))
      fail(ErrKind::invalid_parameter, "matrix generator is singular mod p");
    gens.push_back(std::move(m));
  }
  FMat id{dim, p, std::vector<std::uint32_t>(static_cast<std::size_t>(dim) * dim, 0)};
  for (std::uint32_t i = 0; i < dim; ++i) id.v[i * dim + i] = 1;
  auto elems = bfs_closure<FMat, FMat::Hash>(id, gens, mat_mul, caps.closure_cap);
  return group_from_elements<FMat, FMat::Hash>(elems, mat_mul, mat_label, caps);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Caps& caps) {
  const std::size_t n = static_cast<std::size_t>(a->order()) * b->order();
  if (n > caps.closure_cap)
    fail(ErrKind::cap_exceeded, "direct product order exceeds the closure cap");
  const Elem na = a->order(), nb = b->order(), m = static_cast<Elem>(n);
  std::vector<Elem> table(n * n);
  for (Elem a1 = 0; a1 < na; ++a1)
    for (Elem b1 = 0; b1 < nb; ++b1)
      for (Elem a2 = 0; a2 < na; ++a2)
        for (Elem b2 = 0; b2 < nb; ++b2)
          table[static_cast<std::size_t>(a1 * nb + b1) * m + (a2 * nb + b2)] =
              a->mul(a1, a2) * nb + b->mul(b1, b2);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y) labels.push_back("(" + a->label(x) + ", " + b->label(y) + ")");
  return FiniteGroup::create(m, std::move(table), std::move(labels), caps);
}

SemidirectProduct semidirect_product(const GroupPtr& n, const GroupPtr& h,
                                     const std::vector<Permutation>& action, const Caps& caps) {
  if (action.size() != h->order())
    fail(ErrKind::invalid_parameter, "action must assign one permutation per element of H");
  for (const auto& perm : action)
    if (perm.degree() != n->order())
      fail(ErrKind::invalid_parameter, "action permutation degree must equal |N|");

  // Every action image must preserve N's multiplication.
  for (Elem hi = 0; hi < h->order(); ++hi) {
    const Permutation& f = action[hi];
    for (Elem x = 0; x < n->order(); ++x)
      for (Elem y = 0; y < n->order(); ++y)
        if (f(n->mul(x, y)) != n->mul(f(x), f(y)))
          fail(ErrKind::action_not_automorphism,
               "action image of H element " + std::to_string(hi) + " is not an automorphism of N");
  }
  // And h -> action[h] must be a homomorphism into Aut(N).
  for (Elem h1 = 0; h1 < h->order(); ++h1)
    for (Elem h2 = 0; h2 < h->order(); ++h2)
      if (!(action[h->mul(h1, h2)] == action[h1] * action[h2]))
        fail(ErrKind::action_not_homomorphism, "action is not a homomorphism into Aut(N)");

  const std::size_t total = static_cast<std::size_t>(n->order()) * h->order();
  if (total > caps.closure_cap)
    fail(ErrKind::cap_exceeded, "semidirect product order exceeds the closure cap");
  const Elem nn = n->order(), nh = h->order(), m = static_cast<Elem>(total);
  std::vector<Elem> table(total * total);
  for (Elem n1 = 0; n1 < nn; ++n1)
    for (Elem h1 = 0; h1 < nh; ++h1)
      for (Elem n2 = 0; n2 < nn; ++n2)
        for (Elem h2 = 0; h2 < nh; ++h2)
          table[static_cast<std::size_t>(n1 * nh + h1) * m + (n2 * nh + h2)] =
              n->mul(n1, action[h1](n2)) * nh + h->mul(h1, h2);
  std::vector<std::string> labels;
  labels.reserve(total);
  for (Elem x = 0; x < nn; ++x)
    for (Elem y = 0; y < nh; ++y) labels.push_back("(" + n->label(x) + " | " + h->label(y) + ")");
  GroupPtr g = FiniteGroup::create(m, std::move(table), std::move(labels), caps);

  std::vector<Elem> ncopy, hcopy;
  for (Elem x = 0; x < nn; ++x) ncopy.push_back(x * nh + h->identity());
  for (Elem y = 0; y < nh; ++y) hcopy.push_back(n->identity() * nh + y);
  std::sort(ncopy.begin(), ncopy.end());
  std::sort(hcopy.begin(), hcopy.end());
  return {g, SubgroupSet::unchecked(g, std::move(ncopy)), SubgroupSet::unchecked(g, std::move(hcopy))};
}

Quotient quotient_group(const GroupPtr& g, const SubgroupSet& n) {
  if (n.parent().get() != g.get())
    fail(ErrKind::invalid_parameter, "subgroup belongs to a different group");
  if (!n.is_normal()) fail(ErrKind::not_normal, "cannot quotient by a non-normal subgroup");

  constexpr Elem kUnassigned = ~Elem{0};
  std::vector<Elem> coset(g->order(), kUnassigned);
  std::vector<Elem> reps;  // least member of each coset, in increasing order
  for (Elem x = 0; x < g->order(); ++x) {
    if (coset[x] != kUnassigned) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : n.members()) coset[g->mul(x, m)] = id;
  }
  const Elem k = static_cast<Elem>(reps.size());
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j)
      table[static_cast<std::size_t>(i) * k + j] = coset[g->mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  labels.reserve(k);
  for (Elem i = 0; i < k; ++i) labels.push_back("[" + g->label(reps[i]) + "]");
  GroupPtr q = FiniteGroup::create(k, std::move(table), std::move(labels));
  return {q, GroupHomomorphism::create(g, q, std::move(coset))};
}

std::vector<Elem> conjugate_members(const FiniteGroup& g, const std::vector<Elem>& s, Elem by) {
  std::vector<Elem> out;
  out.reserve(s.size());
  Elem byinv = g.inv(by);
  for (Elem m : s) out.push_back(g.mul(g.mul(by, m), byinv));
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupSet normal_core(const SubgroupSet& q) {
  const GroupPtr& p = q.parent();
  const FiniteGroup& g = *p;

  // Direct computation: intersect all conjugates of Q.
  DenseSet bits = q.to_set();
  DenseSet conj(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    conj.clear();
    Elem xinv = g.inv(x);
    for (Elem m : q.members()) conj.set(g.mul(g.mul(x, m), xinv));
    bits &= conj;
  }
  std::vector<Elem> core = bits.members();

  // Cross-check: kernel of the action on left cosets of Q.
  constexpr Elem kUnassigned = ~Elem{0};
  std::vector<Elem> coset(g.order(), kUnassigned);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset[x] != kUnassigned) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : q.members()) coset[g.mul(x, m)] = id;
  }
  std::vector<Elem> kernel;
  for (Elem x = 0; x < g.order(); ++x) {
    bool fixes_all = true;
    for (Elem r : reps)
      if (coset[g.mul(x, r)] != coset[r]) {
        fixes_all = false;
        break;
      }
    if (fixes_all) kernel.push_back(x);
  }
  if (kernel != core) throw std::logic_error("normal_core: conjugate intersection and coset-action kernel disagree");

  return SubgroupSet::unchecked(p, std::move(core));
}

SubgroupSet intersect_conjugates(const GroupPtr& f, const SubgroupSet& l, const SubgroupSet& a) {
  if (l.parent().get() != f.get() || a.parent().get() != f.get())
    fail(ErrKind::invalid_parameter, "subgroups belong to a different group");
  if (!a.to_set().subset_of(l.to_set()))
    fail(ErrKind::not_subgroup, "A is not contained in L");
  if (!a.is_abelian()) fail(ErrKind::not_abelian, "A is not abelian");
  DenseSet a_bits = a.to_set();
  for (Elem x : l.members())
    for (Elem m : a.members())
      if (!a_bits.test(f->conj(x, m))) fail(ErrKind::not_normal, "A is not normal in L");
  if (!l.is_normal()) fail(ErrKind::not_normal, "L is not normal in F");

  DenseSet bits = a.to_set();
  DenseSet conj(f->order());
  for (Elem g = 0; g < f->order(); ++g) {
    conj.clear();
    Elem ginv = f->inv(g);
    for (Elem m : a.members()) conj.set(f->mul(f->mul(g, m), ginv));
    bits &= conj;
  }
  SubgroupSet m = SubgroupSet::unchecked(f, bits.members());

  // Post-conditions guaranteed by the construction; guard them anyway.
  BigInt lhs(static_cast<unsigned long>(l.size() / m.size()));
  BigInt rhs = big_pow(BigInt(static_cast<unsigned long>(l.size() / a.size())),
                       static_cast<unsigned long>(f->order() / l.size()));
  if (!(lhs <= rhs)) throw std::logic_error("intersect_conjugates: index bound violated");
  if (!m.is_normal()) throw std::logic_error("intersect_conjugates: M not normal in F");
  return m;
}

std::vector<Elem> table_closure(const FiniteGroup& g, const std::vector<Elem>& gens,
                                std::size_t cap) {
  DenseSet bits(g.order());
  std::vector<Elem> list{g.identity()};
  bits.set(g.identity());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Elem gen : gens) {
      Elem y = g.mul(list[i], gen);
      if (!bits.test(y)) {
        bits.set(y);
        list.push_back(y);
        if (cap && list.size() > cap)
          fail(ErrKind::cap_exceeded, "subgroup closure exceeds cap");
      }
    }
  }
  return bits.members();
}

}  // namespace jk
