#include "etaq/arith.hpp"

namespace etaq {

int kronecker(const Int& a, const Int& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

int kronecker(long a, long n) { return kronecker(Int(a), Int(n)); }

Int divisor_sum(unsigned k, const Int& n) {
  if (n < 1) throw Error("divisor_sum requires n >= 1");
  if (!n.fits_ulong_p()) throw Error("divisor_sum: n too large for trial division");
  unsigned long m = n.get_ui();
  Int total = 0;
  for (unsigned long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    total += pow_int(Int(d), k);
    unsigned long q = m / d;
    if (q != d) total += pow_int(Int(q), k);
  }
  return total;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

// Witness set valid for all n < 2^64.
constexpr uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (uint64_t w : kWitnesses) {
    uint64_t x = powmod_u64(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64 || !mpz_fits_ulong_p(n.get_mpz_t()))
    throw Error("is_prime: argument out of the supported range (n < 2^64)");
  return miller_rabin_u64(n.get_ui());
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Int& base, long e) {
  if (e >= 0) return Rat(pow_int(base, static_cast<unsigned long>(e)));
  Rat r(1, pow_int(base, static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0) throw Error("valuation of zero");
  Int m = abs(n);
  unsigned v = 0;
  while (divides(p, m)) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace etaq
