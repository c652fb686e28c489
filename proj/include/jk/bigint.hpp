#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jk {

/// Exact arbitrary-precision integer (bounds reach 72! and beyond).
using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline BigInt big_factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Largest integer JSON can carry exactly as a number (2^53 - 1); bigger
/// values are serialized as decimal strings.
inline const BigInt& json_safe_max() {
  static const BigInt v("9007199254740991");
  return v;
}

}  // namespace jk
