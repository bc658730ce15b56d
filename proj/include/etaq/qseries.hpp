#pragma once

// Truncated series in q^(1/24) supported on a single residue class mod 24.
// Storage is dense, stepped by 24 inside the class: slot i holds the
// coefficient of q^((min_exp + 24 i)/24). Coefficients are valid for every
// exponent n < precision; lookups beyond that throw.
//
// The coefficient domain is a template parameter: RatRing (exact rationals,
// the default domain) or ModRing (integers mod l^e, used by the congruence
// harness and cross-checked against the exact domain).

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"

namespace etaq {

struct RatRing {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(const Int& v) const { return Rat(v); }
  Elem from_rat(const Rat& v) const { return v; }
  bool is_zero(const Elem& v) const { return sgn(v) == 0; }
  void add_assign(Elem& a, const Elem& b) const { a += b; }
  void sub_assign(Elem& a, const Elem& b) const { a -= b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  void addmul(Elem& acc, const Elem& a, const Elem& b, Elem& tmp) const {
    mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
  }
  Elem neg(const Elem& v) const { return -v; }
  Elem inv(const Elem& v) const {
    if (sgn(v) == 0) throw ZeroLeadingCoefficient("cannot invert zero coefficient");
    return Rat(1) / v;
  }
  void normalize(Elem&) const {}
  bool compatible(const RatRing&) const { return true; }
  std::string describe() const { return "exact"; }
};

class ModRing {
 public:
  using Elem = Int;
  ModRing() : m_(0) {}
  explicit ModRing(Int modulus) : m_(std::move(modulus)) {
    if (m_ < 2) throw Error("ModRing modulus must be >= 2");
  }
  const Int& modulus() const { return m_; }
  Elem zero() const { return Int(0); }
  Elem one() const { return Int(1); }
  Elem from_int(const Int& v) const {
    Int r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m_.get_mpz_t());
    return r;
  }
  Elem from_rat(const Rat& v) const {
    Elem num = from_int(v.get_num());
    if (v.get_den() == 1) return num;
    Int dinv;
    if (!mpz_invert(dinv.get_mpz_t(), v.get_den().get_mpz_t(), m_.get_mpz_t()))
      throw Error("ModRing: denominator not invertible mod modulus");
    return mul(num, dinv);
  }
  bool is_zero(const Elem& v) const { return sgn(v) == 0; }
  void add_assign(Elem& a, const Elem& b) const {
    a += b;
    if (a >= m_) a -= m_;
  }
  void sub_assign(Elem& a, const Elem& b) const {
    a -= b;
    if (a < 0) a += m_;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    Int r = a * b;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m_.get_mpz_t());
    return r;
  }
  void addmul(Elem& acc, const Elem& a, const Elem& b, Elem&) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m_.get_mpz_t());
  }
  Elem neg(const Elem& v) const { return sgn(v) == 0 ? v : Int(m_ - v); }
  Elem inv(const Elem& v) const {
    Int r;
    if (sgn(v) == 0 || !mpz_invert(r.get_mpz_t(), v.get_mpz_t(), m_.get_mpz_t()))
      throw ZeroLeadingCoefficient("leading coefficient not invertible mod modulus");
    return r;
  }
  void normalize(Elem& v) const { mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m_.get_mpz_t()); }
  bool compatible(const ModRing& o) const { return m_ == o.m_; }
  std::string describe() const { return "mod " + m_.get_str(); }

 private:
  Int m_;
};

// Smallest exponent >= x on the residue class.
inline long align_up(long x, int residue) {
  long r = mod_floor(residue, 24);
  return x + mod_floor(r - x, 24);
}

template <class Ring>
struct BasicSeries {
  using Elem = typename Ring::Elem;

  Ring ring;
  int residue = 0;   // class of supported exponents, in [0,24)
  long min_exp = 0;  // smallest potentially nonzero exponent, ≡ residue (mod 24)
  long precision = 0;
  std::vector<Elem> coeffs;

  BasicSeries() = default;
  BasicSeries(Ring r, int res, long mn, long prec)
      : ring(std::move(r)), residue(static_cast<int>(mod_floor(res, 24))), min_exp(mn), precision(prec) {
    if (mod_floor(min_exp, 24) != residue) throw Error("min_exp off the residue class");
    coeffs.assign(static_cast<size_t>(slot_count()), ring.zero());
  }

  long slot_count() const {
    if (precision <= min_exp) return 0;
    return (precision - min_exp + 23) / 24;
  }
  long exp_of_slot(long i) const { return min_exp + 24 * i; }
  bool on_class(long n) const { return mod_floor(n, 24) == residue; }

  Elem coeff(long n) const {
    if (n >= precision)
      throw PrecisionExceeded("coefficient at exponent " + std::to_string(n) +
                              " beyond precision " + std::to_string(precision));
    if (!on_class(n) || n < min_exp) return ring.zero();
    long i = (n - min_exp) / 24;
    if (i >= static_cast<long>(coeffs.size())) return ring.zero();
    return coeffs[static_cast<size_t>(i)];
  }

  void set(long n, Elem v) {
    if (!on_class(n) || n < min_exp || n >= precision) throw Error("set: exponent out of range");
    coeffs[static_cast<size_t>((n - min_exp) / 24)] = std::move(v);
  }

  bool is_zero_series() const {
    for (const auto& c : coeffs)
      if (!ring.is_zero(c)) return false;
    return true;
  }
};

using Q24Series = BasicSeries<RatRing>;
using ModSeries = BasicSeries<ModRing>;

namespace detail {
template <class Ring>
void require_compatible(const BasicSeries<Ring>& f, const BasicSeries<Ring>& g) {
  if (!f.ring.compatible(g.ring)) throw Error("series live over incompatible coefficient rings");
}

// Pentagonal exponents (6j+1)^2 <= span with sign (-1)^j, j != 0, as
// (slot offset, sign) pairs relative to steps of 24.
std::vector<std::pair<long, int>> pent_offsets(long span);
}  // namespace detail

template <class Ring>
BasicSeries<Ring> zero_series(Ring ring, int residue, long precision) {
  return BasicSeries<Ring>(std::move(ring), residue, align_up(precision, residue), precision);
}

template <class Ring>
BasicSeries<Ring> constant_one(Ring ring, long precision) {
  BasicSeries<Ring> s(std::move(ring), 0, 0, precision);
  if (s.slot_count() > 0) s.coeffs[0] = s.ring.one();
  return s;
}

template <class Ring>
BasicSeries<Ring> truncate(const BasicSeries<Ring>& f, long precision) {
  if (precision > f.precision) throw PrecisionExceeded("truncate cannot raise precision");
  long mn = f.min_exp <= precision ? f.min_exp : align_up(precision, f.residue);
  BasicSeries<Ring> r(f.ring, f.residue, mn, precision);
  long n = std::min<long>(r.slot_count(), static_cast<long>(f.coeffs.size()));
  for (long i = 0; i < n; ++i) r.coeffs[static_cast<size_t>(i)] = f.coeffs[static_cast<size_t>(i)];
  return r;
}

template <class Ring>
BasicSeries<Ring> add(const BasicSeries<Ring>& f, const BasicSeries<Ring>& g) {
  detail::require_compatible(f, g);
  if (f.residue != g.residue)
    throw ResidueMismatch("add requires equal residues (" + std::to_string(f.residue) + " vs " +
                          std::to_string(g.residue) + ")");
  long precision = std::min(f.precision, g.precision);
  long mn = std::min(f.min_exp, g.min_exp);
  if (mn > precision) mn = align_up(precision, f.residue);
  BasicSeries<Ring> r(f.ring, f.residue, mn, precision);
  long nslots = r.slot_count();
  long off_f = (f.min_exp - mn) / 24;
  long off_g = (g.min_exp - mn) / 24;
  for (long i = 0; i < static_cast<long>(f.coeffs.size()); ++i) {
    long k = i + off_f;
    if (k >= nslots) break;
    r.coeffs[static_cast<size_t>(k)] = f.coeffs[static_cast<size_t>(i)];
  }
  for (long i = 0; i < static_cast<long>(g.coeffs.size()); ++i) {
    long k = i + off_g;
    if (k >= nslots) break;
    r.ring.add_assign(r.coeffs[static_cast<size_t>(k)], g.coeffs[static_cast<size_t>(i)]);
  }
  return r;
}

template <class Ring>
BasicSeries<Ring> scale(const typename Ring::Elem& c, const BasicSeries<Ring>& f) {
  BasicSeries<Ring> r(f.ring, f.residue, f.min_exp, f.precision);
  for (size_t i = 0; i < f.coeffs.size(); ++i) r.coeffs[i] = f.ring.mul(c, f.coeffs[i]);
  return r;
}

template <class Ring>
BasicSeries<Ring> sub(const BasicSeries<Ring>& f, const BasicSeries<Ring>& g) {
  return add(f, scale(g.ring.neg(g.ring.one()), g));
}

// In-place w -= c * v, used by basis elimination; v must cover w's precision.
template <class Ring>
void submul_series(BasicSeries<Ring>& w, const typename Ring::Elem& c, const BasicSeries<Ring>& v) {
  detail::require_compatible(w, v);
  if (w.residue != v.residue) throw ResidueMismatch("submul_series requires equal residues");
  if (v.precision < w.precision) throw PrecisionExceeded("submul_series: subtrahend shorter than target");
  typename Ring::Elem tmp = w.ring.zero();
  typename Ring::Elem mc = w.ring.neg(c);
  long off = (v.min_exp - w.min_exp) / 24;
  for (long i = 0; i < static_cast<long>(v.coeffs.size()); ++i) {
    long k = i + off;
    if (k < 0) continue;
    if (k >= static_cast<long>(w.coeffs.size())) break;
    const auto& vi = v.coeffs[static_cast<size_t>(i)];
    if (v.ring.is_zero(vi)) continue;
    w.ring.addmul(w.coeffs[static_cast<size_t>(k)], mc, vi, tmp);
  }
}

template <class Ring>
BasicSeries<Ring> mul(const BasicSeries<Ring>& f, const BasicSeries<Ring>& g) {
  detail::require_compatible(f, g);
  long mn = f.min_exp + g.min_exp;
  long precision = std::min(f.precision + g.min_exp, g.precision + f.min_exp);
  BasicSeries<Ring> r(f.ring, static_cast<int>(mod_floor(f.residue + g.residue, 24)), mn, precision);
  long nslots = r.slot_count();
  typename Ring::Elem tmp = r.ring.zero();
  for (long i = 0; i < static_cast<long>(f.coeffs.size()); ++i) {
    const auto& ca = f.coeffs[static_cast<size_t>(i)];
    if (f.ring.is_zero(ca)) continue;
    long jmax = std::min<long>(static_cast<long>(g.coeffs.size()), nslots - i);
    for (long j = 0; j < jmax; ++j) {
      const auto& cb = g.coeffs[static_cast<size_t>(j)];
      if (g.ring.is_zero(cb)) continue;
      r.ring.addmul(r.coeffs[static_cast<size_t>(i + j)], ca, cb, tmp);
    }
  }
  return r;
}

template <class Ring>
BasicSeries<Ring> pow_nonneg(const BasicSeries<Ring>& f, unsigned e) {
  if (e == 0) return constant_one(f.ring, f.precision);
  BasicSeries<Ring> base = f;
  BasicSeries<Ring> acc;
  bool have = false;
  while (e) {
    if (e & 1) {
      acc = have ? mul(acc, base) : base;
      have = true;
    }
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

template <class Ring>
BasicSeries<Ring> invert(const BasicSeries<Ring>& f) {
  if (f.coeffs.empty() || f.ring.is_zero(f.coeffs[0]))
    throw ZeroLeadingCoefficient("invert requires a nonzero leading coefficient");
  typename Ring::Elem lead_inv = f.ring.inv(f.coeffs[0]);
  long mn = -f.min_exp;
  long precision = f.precision - 2 * f.min_exp;
  BasicSeries<Ring> r(f.ring, static_cast<int>(mod_floor(-f.residue, 24)), mn, precision);
  long nslots = r.slot_count();
  typename Ring::Elem tmp = r.ring.zero();
  for (long u = 0; u < nslots; ++u) {
    typename Ring::Elem acc = (u == 0) ? r.ring.one() : r.ring.zero();
    long imax = std::min<long>(static_cast<long>(f.coeffs.size()) - 1, u);
    for (long i = 1; i <= imax; ++i) {
      const auto& fi = f.coeffs[static_cast<size_t>(i)];
      if (f.ring.is_zero(fi)) continue;
      r.ring.addmul(acc, f.ring.neg(fi), r.coeffs[static_cast<size_t>(u - i)], tmp);
    }
    r.coeffs[static_cast<size_t>(u)] = r.ring.mul(acc, lead_inv);
  }
  return r;
}

template <class Ring>
bool equal_upto(const BasicSeries<Ring>& f, const BasicSeries<Ring>& g, long bound) {
  detail::require_compatible(f, g);
  if (bound > f.precision || bound > g.precision)
    throw PrecisionExceeded("equal_upto bound exceeds a precision");
  long start = f.min_exp;
  if (g.residue == f.residue) start = std::min(f.min_exp, g.min_exp);
  for (long n = start; n < bound; n += 24) {
    auto a = f.coeff(n);
    auto b = g.on_class(n) ? g.coeff(n) : g.ring.zero();
    if (!(a == b)) return false;
  }
  if (g.residue != f.residue) {
    // f vanishes off its own class, so g must too
    for (long n = g.min_exp; n < bound; n += 24) {
      if (!g.ring.is_zero(g.coeff(n))) return false;
    }
  }
  return true;
}

template <class Ring>
BasicSeries<Ring> multiply_eta(const BasicSeries<Ring>& f) {
  long mn = f.min_exp + 1;
  long precision = f.precision + 1;
  BasicSeries<Ring> r(f.ring, static_cast<int>(mod_floor(f.residue + 1, 24)), mn, precision);
  long nslots = r.slot_count();
  auto pents = detail::pent_offsets(24 * nslots + 1);
  for (long i = 0; i < static_cast<long>(f.coeffs.size()) && i < nslots; ++i)
    r.coeffs[static_cast<size_t>(i)] = f.coeffs[static_cast<size_t>(i)];
  // r = sum_j (-1)^j q^{(6j+1)^2/24} f ; the j = 0 termは the copy above
  for (const auto& [off, sgn_] : pents) {
    for (long i = 0; i + off < nslots && i < static_cast<long>(f.coeffs.size()); ++i) {
      const auto& v = f.coeffs[static_cast<size_t>(i)];
      if (f.ring.is_zero(v)) continue;
      if (sgn_ > 0)
        r.ring.add_assign(r.coeffs[static_cast<size_t>(i + off)], v);
      else
        r.ring.sub_assign(r.coeffs[static_cast<size_t>(i + off)], v);
    }
  }
  return r;
}

template <class Ring>
BasicSeries<Ring> divide_eta(const BasicSeries<Ring>& f) {
  long mn = f.min_exp - 1;
  long precision = f.precision - 1;
  BasicSeries<Ring> r(f.ring, static_cast<int>(mod_floor(f.residue - 1, 24)), mn, precision);
  long nslots = r.slot_count();
  auto pents = detail::pent_offsets(24 * nslots + 1);
  // x(v) = f(v+1) - sum_{j!=0} (-1)^j x(v+1-(6j+1)^2); offsets are multiples of 24
  for (long i = 0; i < nslots; ++i) {
    typename Ring::Elem acc =
        (i < static_cast<long>(f.coeffs.size())) ? f.coeffs[static_cast<size_t>(i)] : f.ring.zero();
    for (const auto& [off, sgn_] : pents) {
      long k = i - off;
      if (k < 0) break;  // offsets ascending
      const auto& v = r.coeffs[static_cast<size_t>(k)];
      if (r.ring.is_zero(v)) continue;
      if (sgn_ > 0)
        r.ring.sub_assign(acc, v);
      else
        r.ring.add_assign(acc, v);
    }
    r.ring.normalize(acc);
    r.coeffs[static_cast<size_t>(i)] = std::move(acc);
  }
  return r;
}

ModSeries reduce_mod(const Q24Series& f, const ModRing& ring);

// Versioned JSON round-trip for the exact domain; big integers as decimal strings.
std::string q24_to_json(const Q24Series& f);
Q24Series q24_from_json(const std::string& doc);

}  // namespace etaq
