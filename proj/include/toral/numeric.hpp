#pragma once

// Exact arbitrary-precision scalars. Everything structural in this project is
// computed over Int/Rat; doubles appear only in explicitly numeric reports.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace toral {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int abs(const Int& a) { return ::abs(a); }

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

// Truncated square root; `exact` reports whether a is a perfect square.
Int isqrt(const Int& a, bool* exact = nullptr);

// Reduced rational from a possibly uncanonical pair (den != 0).
Rat make_rat(const Int& num, const Int& den);

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

inline double to_double(const Rat& r) { return r.get_d(); }
inline double to_double(const Int& n) { return n.get_d(); }

// Fits-in-int64 check used by JSON serialization.
bool fits_int64(const Int& n);
std::int64_t to_int64(const Int& n);

// Exact decimal expansion truncated to `digits` fractional digits, trailing
// zeros (and a bare '.') removed. Used for deterministic SVG coordinates.
std::string decimal_string(const Rat& r, int digits);

} // namespace toral
