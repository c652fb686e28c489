#include "jk/constructions.hpp"

#include <numeric>
#include <sstream>

#include "jk/error.hpp"
#include "jk/group_ops.hpp"
#include "jk/permutation.hpp"

namespace jk {
namespace {

void check_invariant_chain(const std::vector<std::uint32_t>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) fail(ErrKind::invalid_parameter, "invariant factors must be at least 2");
    if (i && factors[i] % factors[i - 1] != 0)
      fail(ErrKind::invalid_parameter, "each invariant factor must divide the next");
  }
}

std::uint64_t chain_product(const std::vector<std::uint32_t>& factors) {
  std::uint64_t n = 1;
  for (auto d : factors) {
    n *= d;
    if (n > (std::uint64_t{1} << 40))
      fail(ErrKind::cap_exceeded, "invariant-factor product is far beyond any cap");
  }
  return n;
}

}  // namespace

GroupPtr symmetric_group(std::uint32_t n, const Caps& caps) {
  if (n == 0) fail(ErrKind::invalid_parameter, "symmetric group needs n >= 1");
  std::uint64_t ord = 1;
  for (std::uint32_t i = 2; i <= n && ord <= caps.closure_cap; ++i) ord *= i;
  if (ord > caps.closure_cap) fail(ErrKind::cap_exceeded, "order exceeds the closure cap");
  if (n == 1) return close_generators(1, {}, caps);
  std::vector<std::uint32_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0u);
  return close_generators(
      n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})}, caps);
}

GroupPtr alternating_group(std::uint32_t n, const Caps& caps) {
  if (n == 0) fail(ErrKind::invalid_parameter, "alternating group needs n >= 1");
  std::uint64_t ord = 1;
  for (std::uint32_t i = 2; i <= n && ord / 2 <= caps.closure_cap; ++i) ord *= i;
  if (ord / 2 > caps.closure_cap) fail(ErrKind::cap_exceeded, "order exceeds the closure cap");
  if (n <= 2) return close_generators(n, {}, caps);
  std::vector<Permutation> gens;
  for (std::uint32_t i = 2; i < n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return close_generators(n, gens, caps);
}

GroupPtr cyclic_group(std::uint32_t n, const Caps& caps) {
  if (n == 0) fail(ErrKind::invalid_parameter, "cyclic group needs n >= 1");
  if (n > caps.closure_cap) fail(ErrKind::cap_exceeded, "order exceeds the closure cap");
  if (n == 1) return close_generators(1, {}, caps);
  std::vector<std::uint32_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0u);
  return close_generators(n, {Permutation::from_cycles(n, {cycle})}, caps);
}

GroupPtr dihedral_group(std::uint32_t order, const Caps& caps) {
  if (order < 2 || order % 2 != 0)
    fail(ErrKind::invalid_parameter, "dihedral order must be even and at least 2");
  if (order > caps.closure_cap) fail(ErrKind::cap_exceeded, "order exceeds the closure cap");
  if (order == 2) return cyclic_group(2, caps);
  if (order == 4)  // degenerate polygon: the Klein four-group
    return close_generators(
        4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})}, caps);
  const std::uint32_t n = order / 2;
  std::vector<std::uint32_t> rot(n);
  std::iota(rot.begin(), rot.end(), 0u);
  std::vector<std::uint32_t> refl(n);
  for (std::uint32_t i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return close_generators(
      n, {Permutation::from_cycles(n, {rot}), Permutation::from_images(refl)}, caps);
}

GroupPtr quaternion_group(std::uint32_t order, const Caps& caps) {
  if (order < 8 || order % 4 != 0)
    fail(ErrKind::invalid_parameter, "quaternion order must be a multiple of 4, at least 8");
  if (order > caps.closure_cap) fail(ErrKind::cap_exceeded, "order exceeds the closure cap");
  // Dicyclic presentation a^(2k) = 1, b^2 = a^k, b a b^-1 = a^-1;
  // element a^i b^j has index j*2k + i.
  const std::uint32_t k = order / 4, two_k = 2 * k;
  auto idx = [&](std::uint32_t i, std::uint32_t j) { return j * two_k + i; };
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  for (std::uint32_t i1 = 0; i1 < two_k; ++i1)
    for (std::uint32_t j1 = 0; j1 < 2; ++j1)
      for (std::uint32_t i2 = 0; i2 < two_k; ++i2)
        for (std::uint32_t j2 = 0; j2 < 2; ++j2) {
          std::uint32_t i, j;
          if (j1 == 0) {
            i = (i1 + i2) % two_k;
            j = j2;
          } else {
            // b a^i2 = a^-i2 b, and b^2 = a^k
            i = (i1 + two_k - i2 % two_k) % two_k;
            j = 1 + j2;
            if (j == 2) {
              j = 0;
              i = (i + k) % two_k;
            }
          }
          table[static_cast<std::size_t>(idx(i1, j1)) * order + idx(i2, j2)] = idx(i, j);
        }
  std::vector<std::string> labels(order);
  for (std::uint32_t i = 0; i < two_k; ++i)
    for (std::uint32_t j = 0; j < 2; ++j) {
      std::string s = i == 0 && j == 0 ? "e" : "";
      if (i) s += "a^" + std::to_string(i);
      if (j) s += (s.empty() ? "b" : " b");
      labels[idx(i, j)] = s;
    }
  return FiniteGroup::create(order, std::move(table), std::move(labels), caps);
}

GroupPtr abelian_group(const std::vector<std::uint32_t>& invariant_factors, const Caps& caps) {
  check_invariant_chain(invariant_factors);
  std::uint64_t n = chain_product(invariant_factors);
  if (n > caps.closure_cap) fail(ErrKind::cap_exceeded, "order exceeds the closure cap");
  const Elem order = static_cast<Elem>(n);
  const std::size_t r = invariant_factors.size();

  auto decode = [&](Elem x) {
    std::vector<std::uint32_t> c(r);
    for (std::size_t i = 0; i < r; ++i) {
      c[i] = x % invariant_factors[i];
      x /= invariant_factors[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    Elem x = 0;
    for (std::size_t i = r; i-- > 0;) x = x * invariant_factors[i] + c[i];
    return x;
  };

  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (Elem x = 0; x < order; ++x) {
    auto cx = decode(x);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < r; ++i) os << (i ? "," : "") << cx[i];
    os << ')';
    labels[x] = os.str();
    for (Elem y = 0; y < order; ++y) {
      auto cy = decode(y);
      for (std::size_t i = 0; i < r; ++i) cy[i] = (cy[i] + cx[i]) % invariant_factors[i];
      table[static_cast<std::size_t>(x) * order + y] = encode(cy);
    }
  }
  return FiniteGroup::create(order, std::move(table), std::move(labels), caps);
}

GroupPtr binary_icosahedral_group(const Caps& caps) {
  return matrix_group_over_prime_field(2, 5, {{1, 1, 0, 1}, {0, 4, 1, 0}}, caps);
}

GroupPtr zarhin_group(const std::vector<std::uint32_t>& invariant_factors, const Caps& caps) {
  if (invariant_factors.empty())
    fail(ErrKind::invalid_parameter, "zarhin group needs at least one invariant factor");
  check_invariant_chain(invariant_factors);
  const std::uint64_t n64 = chain_product(invariant_factors);
  if (n64 > caps.closure_cap || n64 * n64 * n64 > caps.closure_cap)
    fail(ErrKind::cap_exceeded, "order n^3 exceeds the closure cap");
  const std::uint32_t n = static_cast<std::uint32_t>(n64);
  const std::uint32_t m = invariant_factors.back();  // exponent of K, by the chain property
  const std::size_t r = invariant_factors.size();
  const Elem order = n * n * n;

  auto decode = [&](std::uint32_t x) {
    std::vector<std::uint32_t> c(r);
    for (std::size_t i = 0; i < r; ++i) {
      c[i] = x % invariant_factors[i];
      x /= invariant_factors[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t x = 0;
    for (std::size_t i = r; i-- > 0;) x = x * invariant_factors[i] + c[i];
    return x;
  };
  // <a, g> = sum a_i g_i (m/d_i) mod m
  auto pairing = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& g) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < r; ++i)
      s += static_cast<std::uint64_t>(a[i]) * g[i] * (m / invariant_factors[i]);
    return static_cast<std::uint32_t>(s % m);
  };

  // Precompute componentwise sums and pairings on K-indices.
  std::vector<std::vector<std::uint32_t>> comp(n);
  for (std::uint32_t x = 0; x < n; ++x) comp[x] = decode(x);
  std::vector<std::uint32_t> ksum(static_cast<std::size_t>(n) * n), pair_am(ksum.size());
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      auto c = comp[x];
      for (std::size_t i = 0; i < r; ++i) c[i] = (c[i] + comp[y][i]) % invariant_factors[i];
      ksum[static_cast<std::size_t>(x) * n + y] = encode(c);
      pair_am[static_cast<std::size_t>(x) * n + y] = pairing(comp[x], comp[y]);
    }

  auto idx = [&](std::uint32_t e, std::uint32_t g, std::uint32_t a) {
    return (static_cast<Elem>(e) * n + g) * n + a;
  };
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  for (std::uint32_t e1 = 0; e1 < n; ++e1)
    for (std::uint32_t g1 = 0; g1 < n; ++g1)
      for (std::uint32_t a1 = 0; a1 < n; ++a1) {
        const Elem row = idx(e1, g1, a1);
        for (std::uint32_t e2 = 0; e2 < n; ++e2)
          for (std::uint32_t g2 = 0; g2 < n; ++g2)
            for (std::uint32_t a2 = 0; a2 < n; ++a2) {
              std::uint32_t twist = (n / m) * pair_am[static_cast<std::size_t>(a2) * n + g1];
              std::uint32_t e = (e1 + e2 + twist) % n;
              table[static_cast<std::size_t>(row) * order + idx(e2, g2, a2)] =
                  idx(e, ksum[static_cast<std::size_t>(g1) * n + g2],
                      ksum[static_cast<std::size_t>(a1) * n + a2]);
            }
      }
  std::vector<std::string> labels(order);
  for (std::uint32_t e = 0; e < n; ++e)
    for (std::uint32_t g = 0; g < n; ++g)
      for (std::uint32_t a = 0; a < n; ++a) {
        std::ostringstream os;
        os << '(' << e << "; ";
        for (std::size_t i = 0; i < r; ++i) os << (i ? "," : "") << comp[g][i];
        os << "; ";
        for (std::size_t i = 0; i < r; ++i) os << (i ? "," : "") << comp[a][i];
        os << ')';
        labels[idx(e, g, a)] = os.str();
      }
  return FiniteGroup::create(order, std::move(table), std::move(labels), caps);
}

GroupSpec GroupSpec::for_family(std::string family, std::vector<std::uint32_t> params) {
  GroupSpec s;
  s.kind = Kind::family;
  s.family = std::move(family);
  s.params = std::move(params);
  return s;
}

std::string GroupSpec::summary() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::family: {
      os << family << '(';
      for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
      os << ')';
      break;
    }
    case Kind::permutation_generators:
      os << "perm(degree=" << degree << ", " << perm_generators.size() << " generators)";
      break;
    case Kind::matrix_generators:
      os << "mat(dim=" << dim << ", p=" << prime << ", " << mat_generators.size()
         << " generators)";
      break;
    case Kind::cayley_table:
      os << "cayley(order=" << order << ')';
      break;
  }
  return os.str();
}

GroupPtr from_spec(const GroupSpec& spec, const Caps& caps) {
  switch (spec.kind) {
    case GroupSpec::Kind::family: {
      const std::string& f = spec.family;
      auto single = [&]() -> std::uint32_t {
        if (spec.params.size() != 1)
          fail(ErrKind::invalid_parameter, "family '" + f + "' takes exactly one parameter");
        return spec.params[0];
      };
      if (f == "symmetric") return symmetric_group(single(), caps);
      if (f == "alternating") return alternating_group(single(), caps);
      if (f == "cyclic") return cyclic_group(single(), caps);
      if (f == "dihedral") return dihedral_group(single(), caps);
      if (f == "quaternion") return quaternion_group(single(), caps);
      if (f == "abelian") return abelian_group(spec.params, caps);
      if (f == "zarhin") return zarhin_group(spec.params, caps);
      if (f == "binary_icosahedral" || f == "binary-icosahedral") {
        if (!spec.params.empty())
          fail(ErrKind::invalid_parameter, "binary_icosahedral takes no parameters");
        return binary_icosahedral_group(caps);
      }
      fail(ErrKind::unknown_family, "unknown family '" + f + "'");
    }
    case GroupSpec::Kind::permutation_generators: {
      std::vector<Permutation> gens;
      gens.reserve(spec.perm_generators.size());
      for (const auto& cycles : spec.perm_generators)
        gens.push_back(Permutation::from_cycles(spec.degree, cycles));
      return close_generators(spec.degree, gens, caps);
    }
    case GroupSpec::Kind::matrix_generators:
      return matrix_group_over_prime_field(spec.dim, spec.prime, spec.mat_generators, caps);
    case GroupSpec::Kind::cayley_table:
      return FiniteGroup::create(spec.order, spec.table, spec.labels, caps);
  }
  fail(ErrKind::invalid_parameter, "unhandled spec kind");
}

}  // namespace jk
