#include "toral/numeric.hpp"

#include <stdexcept>

namespace toral {

Int isqrt(const Int& a, bool* exact) {
  if (sign(a) < 0) throw std::invalid_argument("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  if (exact) *exact = (r * r == a);
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (sign(den) == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool fits_int64(const Int& n) {
  static const Int lo = Int("-9223372036854775808");
  static const Int hi = Int("9223372036854775807");
  return n >= lo && n <= hi;
}

std::int64_t to_int64(const Int& n) {
  if (!fits_int64(n)) throw std::overflow_error("value does not fit in int64");
  bool neg = sign(n) < 0;
  Int a = abs(n);
  std::uint64_t u = 0;
  Int rest = a;
  // mpz_get_ui only yields the low bits of a limb on some ABIs; go via string-free loop.
  Int base = Int(1) << 32;
  Int high = rest / base;
  Int low = rest % base;
  u = (static_cast<std::uint64_t>(mpz_get_ui(high.get_mpz_t())) << 32) |
      static_cast<std::uint64_t>(mpz_get_ui(low.get_mpz_t()));
  return neg ? -static_cast<std::int64_t>(u) : static_cast<std::int64_t>(u);
}

std::string decimal_string(const Rat& r, int digits) {
  Int num = Int(r.get_num());
  Int den = Int(r.get_den());
  bool neg = sign(num) < 0;
  if (neg) num = -num;
  Int ip = num / den;
  Int rem = num % den;
  std::string out = neg && (sign(ip) != 0 || sign(rem) != 0) ? "-" : "";
  out += ip.get_str();
  if (sign(rem) != 0 && digits > 0) {
    std::string frac;
    for (int i = 0; i < digits && sign(rem) != 0; ++i) {
      rem *= 10;
      Int d = rem / den;
      rem %= den;
      frac += static_cast<char>('0' + d.get_si());
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  return out;
}

} // namespace toral
