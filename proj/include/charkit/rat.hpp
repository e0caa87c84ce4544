#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace charkit {

using Int = mpz_class;
using Rat = mpq_class;  // always kept in canonical form by gmp

inline long to_long(const Int& z) { return mpz_get_si(z.get_mpz_t()); }

inline Int int_pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

std::string rat_str(const Rat& q);

// Parses "a", "-a", "a/b". Throws std::invalid_argument on bad input.
Rat parse_rat(const std::string& s);

}  // namespace charkit
