#pragma once

// Exact scalar arithmetic and elementary number theory shared by all modules.
// Integers and rationals are GMP-backed; nothing in this project ever rounds.

#include <gmpxx.h>

#include <cstdint>

#include "etaq/errors.hpp"

namespace etaq {

using Int = mpz_class;
using Rat = mpq_class;

// Kronecker symbol (a|n), fully extended to all integer a, n.
int kronecker(const Int& a, const Int& n);
int kronecker(long a, long n);

// sigma_k(n) = sum of d^k over divisors d of n. Requires n >= 1.
Int divisor_sum(unsigned k, const Int& n);

// Deterministic Miller-Rabin, exact for n < 2^64 (the harness never needs more;
// larger inputs throw).
bool is_prime(const Int& n);

// base^e for e >= 0.
Int pow_int(const Int& base, unsigned long e);

// base^e as an exact rational, e may be negative.
Rat pow_rat(const Int& base, long e);

// v_p(n): exponent of p in n. Requires n != 0.
unsigned valuation(const Int& n, const Int& p);

inline bool divides(const Int& d, const Int& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

// Floor division helpers for signed 64-bit exponent bookkeeping.
inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline long ceil_div(long a, long b) { return -floor_div(-a, b); }
inline long mod_floor(long a, long b) { return a - b * floor_div(a, b); }

}  // namespace etaq
