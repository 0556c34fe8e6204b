#pragma once

// Exact integer and rational matrices. Small dense dimensions (d <= 4 in
// practice); all elimination is fraction-free over Int or exact over Rat.

#include <string>
#include <vector>

#include "toral/numeric.hpp"

namespace toral {

class RatMatrix;

class IntMatrix {
 public:
  explicit IntMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, Int(0)) {}
  static IntMatrix identity(int dim);
  static IntMatrix diagonal(const std::vector<Int>& d);

  // CLI wire format "a,b;c,d": rows split by ';', entries by ','.
  static IntMatrix parse(const std::string& text);
  std::string format() const;

  int dim() const { return dim_; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const Int& s) const;
  bool operator==(const IntMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }

  Int trace() const;
  Int det() const;   // Bareiss fraction-free elimination
  int rank() const;  // fraction-free row reduction

  bool is_diagonal() const;
  bool is_scalar() const;

 private:
  int dim_;
  std::vector<Int> a_;
};

// Exact A^k by repeated squaring; A^0 is the identity.
IntMatrix mat_pow(const IntMatrix& a, unsigned long k);

// Adjugate (integer) and inverse over the rationals; throws NotInvertible.
IntMatrix adjugate(const IntMatrix& a);
RatMatrix inverse(const IntMatrix& a);

// Basis of the integer kernel of a: primitive (content 1) integer vectors with
// positive leading entry, sorted lexicographically. Deterministic.
std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& a);

class RatMatrix {
 public:
  explicit RatMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, Rat(0)) {}
  explicit RatMatrix(const IntMatrix& m);
  static RatMatrix identity(int dim);

  int dim() const { return dim_; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator*(const Rat& s) const;
  bool operator==(const RatMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }

  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  Rat det() const;

  // Least common multiple of entry denominators (1 for an integer matrix).
  Int denominator_lcm() const;

 private:
  int dim_;
  std::vector<Rat> a_;
};

RatMatrix inverse(const RatMatrix& a);

} // namespace toral
