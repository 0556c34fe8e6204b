#include "toral/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toral {

namespace {
const Int kZero(0);
}

void IntPolynomial::normalize() {
  while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<Int> high_first) {
  IntPolynomial p;
  p.c_.assign(high_first.rbegin(), high_first.rend());
  p.normalize();
  return p;
}

IntPolynomial IntPolynomial::monomial(int degree, const Int& c) {
  IntPolynomial p;
  if (sign(c) != 0) {
    p.c_.assign(static_cast<size_t>(degree) + 1, Int(0));
    p.c_.back() = c;
  }
  return p;
}

IntPolynomial IntPolynomial::x_power_minus_one(int n) {
  IntPolynomial p = monomial(n);
  p.c_[0] = -1;
  return p;
}

int IntPolynomial::degree() const {
  if (is_zero()) throw std::logic_error("degree of the zero polynomial");
  return static_cast<int>(c_.size()) - 1;
}

const Int& IntPolynomial::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return kZero;
  return c_[static_cast<size_t>(k)];
}

const Int& IntPolynomial::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

bool IntPolynomial::is_monic() const { return !is_zero() && leading() == 1; }

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.normalize();
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] -= o.c_[i];
  }
  r.normalize();
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  IntPolynomial r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sign(c_[i]) == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.normalize();
  return r;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (is_zero()) return IntPolynomial();
  std::vector<Int> rem = c_;
  int dq = static_cast<int>(c_.size()) - static_cast<int>(divisor.c_.size());
  if (dq < 0) throw std::invalid_argument("inexact polynomial division");
  std::vector<Int> q(static_cast<size_t>(dq) + 1, Int(0));
  const std::vector<Int>& dv = divisor.c_;
  for (int k = dq; k >= 0; --k) {
    Int& top = rem[static_cast<size_t>(k) + dv.size() - 1];
    if (sign(Int(top % divisor.leading())) != 0) throw std::invalid_argument("inexact polynomial division");
    Int f = top / divisor.leading();
    q[static_cast<size_t>(k)] = f;
    if (sign(f) != 0)
      for (size_t j = 0; j < dv.size(); ++j) rem[static_cast<size_t>(k) + j] -= f * dv[j];
  }
  for (const Int& r : rem)
    if (sign(r) != 0) throw std::invalid_argument("inexact polynomial division");
  IntPolynomial result;
  result.c_ = std::move(q);
  result.normalize();
  return result;
}

IntPolynomial IntPolynomial::derivative() const {
  IntPolynomial r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Int(static_cast<long>(i));
  r.normalize();
  return r;
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPolynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

IntMatrix IntPolynomial::eval(const IntMatrix& m) const {
  IntMatrix acc(m.dim());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * m + IntMatrix::identity(m.dim()) * (*it);
  return acc;
}

IntPolynomial IntPolynomial::deflate(const Int& root) const {
  // Synthetic division by (x - root); remainder must vanish.
  if (is_zero()) throw std::logic_error("deflating the zero polynomial");
  std::vector<Int> q(c_.size() - 1);
  Int carry = c_.back();
  for (size_t i = c_.size() - 1; i > 0; --i) {
    q[i - 1] = carry;
    carry = carry * root + c_[i - 1];
  }
  if (sign(carry) != 0) throw std::logic_error("deflate: not a root");
  IntPolynomial r;
  r.c_ = std::move(q);
  r.normalize();
  return r;
}

std::vector<Int> IntPolynomial::coeffs_high_first() const {
  return std::vector<Int>(c_.rbegin(), c_.rend());
}

IntPolynomial char_poly(const IntMatrix& a) {
  int d = a.dim();
  std::vector<Int> coeffs(static_cast<size_t>(d) + 1, Int(0));  // low first
  coeffs[static_cast<size_t>(d)] = 1;
  IntMatrix m = IntMatrix::identity(d);
  for (int k = 1; k <= d; ++k) {
    IntMatrix n = a * m;
    Int c = -n.trace();
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[static_cast<size_t>(d - k)] = c;
    m = n + IntMatrix::identity(d) * c;
  }
  std::vector<Int> high(coeffs.rbegin(), coeffs.rend());
  return IntPolynomial::from_coeffs(high);
}

namespace {

// Sorted integers bracketing every real root of p: for each root r, both
// floor(r) and ceil(r) are in the result. Recurses through derivatives so
// that consecutive result points of distance >= 2 span monotone pieces.
std::set<Int> root_brackets(const IntPolynomial& p) {
  std::set<Int> out;
  if (p.is_zero() || p.degree() == 0) return out;
  if (p.degree() == 1) {
    Rat r = make_rat(-p.coeff(0), p.coeff(1));
    out.insert(floor_rat(r));
    out.insert(ceil_rat(r));
    return out;
  }
  std::set<Int> crit = root_brackets(p.derivative());
  Int bound = 1;
  for (int k = 0; k <= p.degree(); ++k) {
    Int b = abs(p.coeff(k)) / abs(p.leading()) + 2;
    bound = std::max(bound, b);
  }
  std::set<Int> pts = crit;
  pts.insert(-bound);
  pts.insert(bound);
  auto sgn_at = [&](const Int& x) { return sign(p.eval(x)); };
  std::vector<Int> xs(pts.begin(), pts.end());
  for (const Int& x : xs)
    if (sgn_at(x) == 0) out.insert(x);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    Int lo = xs[i], hi = xs[i + 1];
    int slo = sgn_at(lo), shi = sgn_at(hi);
    if (slo == 0 || shi == 0 || slo == shi) continue;
    // p is monotone on [lo, hi] when hi - lo >= 2 (no interior critical
    // point); a unit interval needs no search.
    while (hi - lo > 1) {
      Int mid = floor_div(lo + hi, Int(2));
      int sm = sgn_at(mid);
      if (sm == 0) {
        out.insert(mid);
        break;
      }
      (sm == slo ? lo : hi) = mid;
    }
    out.insert(lo);
    out.insert(hi);
  }
  out.insert(crit.begin(), crit.end());
  return out;
}

} // namespace

std::vector<std::pair<Int, int>> integer_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots of the zero polynomial");
  std::vector<std::pair<Int, int>> out;
  IntPolynomial q = p;
  auto add_root = [&](const Int& r) {
    int mult = 0;
    while (!q.is_zero() && q.degree() >= 1 && sign(q.eval(r)) == 0) {
      q = q.deflate(r);
      ++mult;
    }
    if (mult) out.emplace_back(r, mult);
  };
  if (q.degree() >= 1 && sign(q.coeff(0)) == 0) add_root(Int(0));
  if (!q.is_zero() && q.degree() == 2 && q.is_monic()) {
    // x^2 + bx + c: integer roots need a perfect-square discriminant;
    // b and sqrt(disc) then share parity, so the halves are exact.
    Int b = q.coeff(1), c = q.coeff(0);
    Int disc = b * b - 4 * c;
    if (sign(disc) >= 0) {
      bool square = false;
      Int s = isqrt(disc, &square);
      if (square) {
        add_root((-b + s) / 2);
        if (sign(s) != 0) add_root((-b - s) / 2);
      }
    }
  } else if (!q.is_zero() && q.degree() >= 1) {
    for (const Int& cand : root_brackets(q)) add_root(cand);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

long totient(long m) {
  long result = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
  IntPolynomial num = IntPolynomial::x_power_minus_one(static_cast<int>(m));
  for (long d = 1; d < m; ++d)
    if (m % d == 0) num = num.divide_exact(cyclotomic(d));
  return num;
}

std::map<long, std::vector<long>> totient_preimage_upto(long d) {
  if (d < 1) throw std::invalid_argument("totient preimage bound must be positive");
  std::map<long, std::vector<long>> out;
  for (long t = 1; t <= d; ++t) out[t] = {};
  for (long m = 1; m <= 2 * d * d; ++m) {
    long t = totient(m);
    if (t <= d) out[t].push_back(m);
  }
  return out;
}

} // namespace toral
