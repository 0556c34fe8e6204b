#pragma once

// Eigenstructure analysis and the smoothness classifier for expanding integer
// matrices. All 2x2 decisions are exact; d >= 3 falls back to certified
// numerics with an explicit Indeterminate outcome.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toral/matrix.hpp"

namespace toral {

inline constexpr double kDefaultTolerance = 1e-9;

enum class EigenKind {
  RealRational,
  RealIrrationalDistinctModulus,
  RealIrrationalEqualModulus,
  ComplexPair,
  Defective,
};

const char* eigen_kind_name(EigenKind k);

struct EigenStructure {
  std::optional<EigenKind> kind;  // exact; present for d <= 2 only
  Int trace;
  Int det;
  Int discriminant;               // tr^2 - 4 det (d = 2), 0 otherwise
  std::vector<double> numeric_moduli;  // sorted ascending
  double tolerance = kDefaultTolerance;
};

enum class Verdict {
  Linear,
  HybridAdmitting,
  EssentiallyNowhereSmooth,
  NowhereDifferentiable,
  UnknownConjecturedNonSmooth,  // expanding d >= 3 failing the power test
};

const char* verdict_name(Verdict v);

struct SmoothnessClass {
  Verdict verdict;
  std::optional<long> witness;  // minimal power n_A when verdict == Linear
  std::string explanation;
};

struct PowerCandidates {
  std::set<long> candidates;
  long lcm_bound;
};

EigenStructure eigen_structure(const IntMatrix& a, double tol = kDefaultTolerance);

// Exact for d <= 2; numeric with certification margin tol for d >= 3, where a
// modulus within tol of 1 raises Indeterminate.
bool is_expanding(const IntMatrix& a, double tol = kDefaultTolerance);

// True when A^k is diagonalizable with integer eigenvalues: every root of
// char_poly(A^k) is an integer and rank(A^k - lambda I) = d - mult(lambda).
bool diagonalizable_with_integer_eigenvalues(const IntMatrix& a);

// Smallest k <= k_max with the property above; k_max defaults to the lcm of
// power_candidates(d).
std::optional<long> minimal_integer_power(const IntMatrix& a);
std::optional<long> minimal_integer_power(const IntMatrix& a, long k_max);

// For d = 2 this is {1,2,3,4,6} with lcm 12. For d > 2 a conservative
// superset: lcms of half-orders m/gcd(2,m) over cyclotomic degree multisets
// summing to at most d, scaled by the modulus-normalizing power nu <= d.
PowerCandidates power_candidates(int d);

// The explicit bound d * (max_{1<=t<=d} max phi^-1(t))^d.
Int length_bound(int d);

// theta in pi*Q for a complex eigenvalue pair, decided exactly by the integer
// test tr^2 in {0, det, 2 det, 3 det, 4 det}. Throws NotComplexPair.
bool angle_is_rational_pi(const IntMatrix& a);

// Total classifier for expanding 2x2 matrices (throws NotExpanding otherwise):
// Linear / HybridAdmitting / EssentiallyNowhereSmooth / NowhereDifferentiable.
SmoothnessClass classify2x2(const IntMatrix& a);

// Classification entry point used by the CLI: dispatches on dimension, with
// the d >= 3 Linear/unknown dichotomy.
SmoothnessClass classify(const IntMatrix& a, double tol = kDefaultTolerance);

// Smallest eigenvalue modulus; exact closed forms for d <= 2, numeric above.
double min_eigenvalue_modulus(const IntMatrix& a);

} // namespace toral
