#pragma once

// Integer-coefficient polynomials: characteristic polynomials, exact integer
// root extraction, and cyclotomics. The zero polynomial is the empty
// coefficient list; degree() is defined only for nonzero polynomials.

#include <map>
#include <utility>
#include <vector>

#include "toral/matrix.hpp"
#include "toral/numeric.hpp"

namespace toral {

class IntPolynomial {
 public:
  IntPolynomial() = default;

  // Coefficients with the highest degree first (the wire order).
  static IntPolynomial from_coeffs(std::vector<Int> high_first);
  static IntPolynomial monomial(int degree, const Int& c = Int(1));
  static IntPolynomial x_power_minus_one(int n);

  bool is_zero() const { return c_.empty(); }
  int degree() const;
  const Int& coeff(int k) const;  // coefficient of x^k (0 beyond degree)
  const Int& leading() const;
  bool is_monic() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  // Exact division; throws std::invalid_argument when the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  IntPolynomial derivative() const;
  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  IntMatrix eval(const IntMatrix& m) const;

  // Quotient by (x - root); precondition eval(root) == 0.
  IntPolynomial deflate(const Int& root) const;

  std::vector<Int> coeffs_high_first() const;

 private:
  std::vector<Int> c_;  // lowest degree first; no trailing (leading) zeros
  void normalize();
};

// Characteristic polynomial by the fraction-free Faddeev-LeVerrier recurrence;
// monic of degree d, constant term (-1)^d det A.
IntPolynomial char_poly(const IntMatrix& a);

// All integer roots with multiplicity, sorted ascending. Exact: closed form
// through degree 2, monotone-interval bisection with exact evaluation above.
std::vector<std::pair<Int, int>> integer_roots(const IntPolynomial& p);

// m-th cyclotomic polynomial, by recursive exact division of x^m - 1.
IntPolynomial cyclotomic(long m);

long totient(long m);

// For each t in 1..d the complete set {m : phi(m) = t}; complete because
// phi(m) >= sqrt(m/2) bounds the search by m <= 2 d^2.
std::map<long, std::vector<long>> totient_preimage_upto(long d);

} // namespace toral
