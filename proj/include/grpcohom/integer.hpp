#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace grpcohom {

using Integer = mpz_class;

// Least nonnegative residue. A modulus of 0 marks a free (Z) coordinate.
inline void reduce(Integer& value, const Integer& modulus) {
  if (modulus != 0) {
    mpz_fdiv_r(value.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  }
}

inline void reduce(Integer& value, std::int64_t modulus) {
  if (modulus != 0) {
    mpz_fdiv_r_ui(value.get_mpz_t(), value.get_mpz_t(),
                  static_cast<unsigned long>(modulus));
  }
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace grpcohom
