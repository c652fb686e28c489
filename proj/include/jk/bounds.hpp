#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "jk/bigint.hpp"

namespace jk {

/// Which closed form produced a bound value — serialized verbatim into
/// tables and reports.
enum class BoundRule {
  minkowski_product,
  collins_small_n,
  collins_60r,
  collins_factorial,
  symmetric_lower,
};
const char* to_string(BoundRule r);

struct BoundEntry {
  std::uint32_t n = 0;
  BigInt value;
  BoundRule rule = BoundRule::minkowski_product;
  /// prime -> exponent; filled for the Minkowski product only.
  std::map<std::uint32_t, std::uint32_t> prime_exponents;
};

/// Sharp multiplicative bound M(n) = prod_p p^(d_p) with
/// d_p = sum_{i>=0} floor(n / (p^i (p-1))), taken over primes p <= n+1
/// (larger primes contribute exponent 0). Values for n = 1..6:
/// 2, 24, 48, 5760, 11520, 2903040.
BoundEntry minkowski_bound(std::uint32_t n);

/// Optimal Jordan-constant values:
///   n = 2..6       -> 60, 360, 25920, 25920, 6531840 (tabulated);
///   n = 7..19      -> not carried by the source table: ErrKind::not_tabulated;
///   n = 20..62 even-chain (all of 20..62, plus 64, 66, 68, 70)
///                  -> 60^r * r!  with n = 2r or n = 2r+1;
///   n = 63, 65, 67, 69 and every n >= 71 -> (n+1)!.
/// n < 2 is ErrKind::invalid_parameter.
BoundEntry collins_value(std::uint32_t n);

/// (n+1)! — the symmetric-construction lower bound; valid for n >= 4
/// (ErrKind::not_applicable below that).
BoundEntry symmetric_lower_bound(std::uint32_t n);

}  // namespace jk
