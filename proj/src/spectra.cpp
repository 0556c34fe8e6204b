#include "toral/spectra.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "toral/errors.hpp"
#include "toral/polynomial.hpp"

namespace toral {

const char* eigen_kind_name(EigenKind k) {
  switch (k) {
    case EigenKind::RealRational:                  return "real-rational";
    case EigenKind::RealIrrationalDistinctModulus: return "real-irrational-distinct-modulus";
    case EigenKind::RealIrrationalEqualModulus:    return "real-irrational-equal-modulus";
    case EigenKind::ComplexPair:                   return "complex-pair";
    case EigenKind::Defective:                     return "defective";
  }
  return "unknown";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Linear:                      return "Linear";
    case Verdict::HybridAdmitting:             return "HybridAdmitting";
    case Verdict::EssentiallyNowhereSmooth:    return "EssentiallyNowhereSmooth";
    case Verdict::NowhereDifferentiable:       return "NowhereDifferentiable";
    case Verdict::UnknownConjecturedNonSmooth: return "UnknownConjecturedNonSmooth";
  }
  return "unknown";
}

namespace {

std::vector<double> companion_moduli(const IntPolynomial& chi) {
  int d = chi.degree();
  if (d == 0) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -to_double(chi.coeff(i));
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  std::vector<double> mods;
  for (int i = 0; i < d; ++i) mods.push_back(std::abs(es.eigenvalues()[i]));
  std::sort(mods.begin(), mods.end());
  return mods;
}

} // namespace

EigenStructure eigen_structure(const IntMatrix& a, double tol) {
  EigenStructure s;
  s.trace = a.trace();
  s.det = a.det();
  s.tolerance = tol;
  int d = a.dim();
  if (d == 2) {
    s.discriminant = s.trace * s.trace - 4 * s.det;
    const Int& disc = s.discriminant;
    if (sign(disc) < 0) {
      s.kind = EigenKind::ComplexPair;
      double m = std::sqrt(to_double(s.det));
      s.numeric_moduli = {m, m};
    } else if (sign(disc) == 0) {
      // Repeated eigenvalue tr/2 (an integer: tr^2 = 4 det forces tr even).
      s.kind = a.is_scalar() ? EigenKind::RealRational : EigenKind::Defective;
      double m = std::abs(to_double(s.trace)) / 2.0;
      s.numeric_moduli = {m, m};
    } else {
      bool square = false;
      Int root = isqrt(disc, &square);
      s.kind = square ? EigenKind::RealRational
             : (sign(s.trace) == 0 ? EigenKind::RealIrrationalEqualModulus
                                   : EigenKind::RealIrrationalDistinctModulus);
      double sd = std::sqrt(to_double(disc));
      double t = to_double(s.trace);
      double m1 = std::abs((t + sd) / 2.0), m2 = std::abs((t - sd) / 2.0);
      s.numeric_moduli = {std::min(m1, m2), std::max(m1, m2)};
      (void)root;
    }
  } else if (d == 1) {
    s.discriminant = 0;
    s.kind = EigenKind::RealRational;
    s.numeric_moduli = {std::abs(to_double(a.at(0, 0)))};
  } else {
    s.discriminant = 0;
    s.numeric_moduli = companion_moduli(char_poly(a));
  }
  return s;
}

bool is_expanding(const IntMatrix& a, double tol) {
  int d = a.dim();
  if (d == 1) return abs(a.at(0, 0)) >= 2;
  if (d == 2) {
    // Exact: both roots of x^2 - tr x + det lie strictly outside the closed
    // unit disk iff |det| >= 2 and |tr| < |det| + sign(det). Via the
    // reciprocal polynomial and the real-coefficient Schur-Cohn test, the
    // boundary cases being chi(1) = 0 or chi(-1) = 0.
    Int tr = a.trace(), det = a.det();
    if (det >= 2) return abs(tr) <= det;
    if (det <= -2) return abs(tr) <= -det - 2;
    return false;
  }
  std::vector<double> mods = companion_moduli(char_poly(a));
  bool all_above = true;
  for (double m : mods) {
    if (m <= 1.0 - tol) return false;
    if (m <= 1.0 + tol) all_above = false;
  }
  if (!all_above)
    throw DomainError(Err::Indeterminate,
                      "an eigenvalue modulus lies within tolerance of 1");
  return true;
}

bool diagonalizable_with_integer_eigenvalues(const IntMatrix& a) {
  int d = a.dim();
  IntPolynomial chi = char_poly(a);
  auto roots = integer_roots(chi);
  int total = 0;
  for (const auto& [root, mult] : roots) total += mult;
  if (total != d) return false;
  for (const auto& [root, mult] : roots) {
    IntMatrix shifted = a - IntMatrix::identity(d) * root;
    if (shifted.rank() != d - mult) return false;
  }
  return true;
}

std::optional<long> minimal_integer_power(const IntMatrix& a, long k_max) {
  IntMatrix b = IntMatrix::identity(a.dim());
  for (long k = 1; k <= k_max; ++k) {
    b = b * a;
    if (diagonalizable_with_integer_eigenvalues(b)) return k;
  }
  return std::nullopt;
}

std::optional<long> minimal_integer_power(const IntMatrix& a) {
  return minimal_integer_power(a, power_candidates(a.dim()).lcm_bound);
}

PowerCandidates power_candidates(int d) {
  // Half-orders n_J = m / gcd(2, m) of the cyclotomics of degree <= d,
  // combined over degree multisets summing to <= d, then scaled by nu <= d.
  auto pre = totient_preimage_upto(d);
  std::vector<std::pair<long, long>> opts;  // (phi(m), n_J)
  for (const auto& [deg, ms] : pre)
    for (long m : ms) opts.emplace_back(deg, m / std::gcd(2L, m));
  std::set<long> lcms;
  lcms.insert(1);
  // Depth-first over multisets with a running degree budget and lcm.
  std::vector<std::tuple<size_t, long, long>> stack{{0, static_cast<long>(d), 1}};
  while (!stack.empty()) {
    auto [i, budget, acc] = stack.back();
    stack.pop_back();
    lcms.insert(acc);
    for (size_t j = i; j < opts.size(); ++j)
      if (opts[j].first <= budget)
        stack.emplace_back(j, budget - opts[j].first, std::lcm(acc, opts[j].second));
  }
  PowerCandidates out;
  for (long nu = 1; nu <= d; ++nu)
    for (long n : lcms) out.candidates.insert(nu * n);
  out.lcm_bound = 1;
  for (long c : out.candidates) out.lcm_bound = std::lcm(out.lcm_bound, c);
  return out;
}

Int length_bound(int d) {
  auto pre = totient_preimage_upto(d);
  long mx = 1;
  for (const auto& [deg, ms] : pre)
    for (long m : ms) mx = std::max(mx, m);
  Int b = 1;
  for (int i = 0; i < d; ++i) b *= mx;
  return b * d;
}

bool angle_is_rational_pi(const IntMatrix& a) {
  if (a.dim() != 2)
    throw DomainError(Err::DimensionUnsupported, "angle test is 2x2 only");
  Int tr = a.trace(), det = a.det();
  Int disc = tr * tr - 4 * det;
  if (sign(disc) >= 0)
    throw DomainError(Err::NotComplexPair, "eigenvalues are real");
  // 4 cos^2(theta) = tr^2 / det must be one of 0..4; only these values of
  // 2 cos(theta) are compatible with roots of unity of cyclotomic degree <= 2.
  Int t2 = tr * tr;
  for (int c = 0; c <= 4; ++c)
    if (t2 == det * c) return true;
  return false;
}

SmoothnessClass classify2x2(const IntMatrix& a) {
  if (a.dim() != 2)
    throw DomainError(Err::DimensionUnsupported, "classify2x2 needs a 2x2 matrix");
  if (!is_expanding(a))
    throw DomainError(Err::NotExpanding, "matrix " + a.format() + " is not expanding");
  std::ostringstream why;
  auto n = minimal_integer_power(a, 12);
  if (n) {
    why << "A^" << *n << " is diagonalizable with integer eigenvalues (minimal power, search bound 12)";
    return {Verdict::Linear, n, why.str()};
  }
  EigenStructure es = eigen_structure(a);
  why << "no power up to 12 is diagonalizable with integer eigenvalues; ";
  switch (*es.kind) {
    case EigenKind::Defective:
      why << "discriminant 0 and not scalar: repeated eigenvalue, not diagonalizable";
      return {Verdict::HybridAdmitting, std::nullopt, why.str()};
    case EigenKind::RealIrrationalDistinctModulus:
      why << "real irrational eigenvalues of distinct modulus (discriminant "
          << es.discriminant.get_str() << " is positive and not a square, trace nonzero)";
      return {Verdict::EssentiallyNowhereSmooth, std::nullopt, why.str()};
    case EigenKind::ComplexPair:
      if (!angle_is_rational_pi(a)) {
        why << "complex eigenvalue pair with argument not in pi*Q "
            << "(tr^2 = " << Int(es.trace * es.trace).get_str()
            << " is not in {0,1,2,3,4} * det)";
        return {Verdict::NowhereDifferentiable, std::nullopt, why.str()};
      }
      break;
    default:
      break;
  }
  // Real-rational, trace-zero irrational, and rational-angle complex cases
  // all have n_A <= 12 and were caught above.
  throw std::logic_error("classify2x2: decision table not exhaustive for " + a.format());
}

SmoothnessClass classify(const IntMatrix& a, double tol) {
  if (a.dim() == 2) return classify2x2(a);
  if (!is_expanding(a, tol))
    throw DomainError(Err::NotExpanding, "matrix " + a.format() + " is not expanding");
  if (a.dim() == 1)
    return {Verdict::Linear, 1, "1x1 integer matrix has an integer eigenvalue"};
  auto pc = power_candidates(a.dim());
  auto n = minimal_integer_power(a, pc.lcm_bound);
  if (n) {
    std::ostringstream why;
    why << "A^" << *n << " is diagonalizable with integer eigenvalues (search bound "
        << pc.lcm_bound << ")";
    return {Verdict::Linear, n, why.str()};
  }
  return {Verdict::UnknownConjecturedNonSmooth, std::nullopt,
          "no candidate power is diagonalizable with integer eigenvalues; "
          "non-smoothness in dimension > 2 is conjectural"};
}

double min_eigenvalue_modulus(const IntMatrix& a) {
  int d = a.dim();
  if (d == 1) return std::abs(to_double(a.at(0, 0)));
  if (d == 2) {
    Int tr = a.trace(), det = a.det();
    Int disc = tr * tr - 4 * det;
    if (sign(disc) < 0) return std::sqrt(to_double(det));
    // Real roots: largest modulus is (|tr| + sqrt(disc))/2, smallest is
    // |det| divided by it (stable against cancellation).
    double sd = std::sqrt(to_double(disc));
    double big = (std::abs(to_double(tr)) + sd) / 2.0;
    if (big == 0.0) return 0.0;
    return std::abs(to_double(det)) / big;
  }
  auto mods = companion_moduli(char_poly(a));
  return mods.empty() ? 0.0 : mods.front();
}

} // namespace toral
