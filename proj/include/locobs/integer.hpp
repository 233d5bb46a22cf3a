#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace locobs {

/// Arbitrary-precision signed integer used for every matrix entry and order.
using Integer = mpz_class;

inline std::string to_string(const Integer& value) { return value.get_str(10); }

inline Integer abs_value(const Integer& value) { return abs(value); }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline bool fits_int64(const Integer& value) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return value.fits_slong_p();
}

}  // namespace locobs
