#include "jk/bounds.hpp"

#include "jk/error.hpp"

namespace jk {

const char* to_string(BoundRule r) {
  switch (r) {
    case BoundRule::minkowski_product: return "minkowski-product";
    case BoundRule::collins_small_n: return "collins-small-n";
    case BoundRule::collins_60r: return "collins-60r";
    case BoundRule::collins_factorial: return "collins-factorial";
    case BoundRule::symmetric_lower: return "symmetric-lower";
  }
  return "?";
}

BoundEntry minkowski_bound(std::uint32_t n) {
  if (n == 0) fail(ErrKind::invalid_parameter, "bound needs n >= 1");
  BoundEntry e;
  e.n = n;
  e.rule = BoundRule::minkowski_product;
  e.value = 1;
  // Only primes p <= n+1 give floor(n / (p-1)) > 0.
  for (std::uint32_t p = 2; p <= n + 1; ++p) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (!prime) continue;
    // d_p = sum_{i>=0} floor(n / (p^i (p-1))); terms vanish once p^i(p-1) > n.
    std::uint32_t dp = 0;
    for (std::uint64_t pk = 1; pk * (p - 1) <= n; pk *= p)
      dp += static_cast<std::uint32_t>(n / (pk * (p - 1)));
    if (dp == 0) continue;
    e.prime_exponents[p] = dp;
    e.value *= big_pow(BigInt(p), dp);
  }
  return e;
}

BoundEntry collins_value(std::uint32_t n) {
  if (n < 2) fail(ErrKind::invalid_parameter, "optimal values start at n = 2");
  BoundEntry e;
  e.n = n;
  if (n <= 6) {
    static constexpr std::uint64_t kSmall[] = {60, 360, 25920, 25920, 6531840};
    e.rule = BoundRule::collins_small_n;
    e.value = BigInt(static_cast<unsigned long>(kSmall[n - 2]));
    return e;
  }
  if (n <= 19)
    fail(ErrKind::not_tabulated,
         "value for n = " + std::to_string(n) + " is not tabulated in source");
  const bool factorial_range =
      n >= 71 || n == 63 || n == 65 || n == 67 || n == 69;
  if (factorial_range) {
    e.rule = BoundRule::collins_factorial;
    e.value = big_factorial(n + 1);
    return e;
  }
  // 20 <= n <= 62, or n in {64, 66, 68, 70}: value 60^r * r!, n = 2r or 2r+1.
  const std::uint32_t r = n / 2;
  e.rule = BoundRule::collins_60r;
  e.value = big_pow(BigInt(60), r) * big_factorial(r);
  return e;
}

BoundEntry symmetric_lower_bound(std::uint32_t n) {
  if (n < 4) fail(ErrKind::not_applicable, "the (n+1)! lower bound needs n >= 4");
  BoundEntry e;
  e.n = n;
  e.rule = BoundRule::symmetric_lower;
  e.value = big_factorial(n + 1);
  return e;
}

}  // namespace jk
