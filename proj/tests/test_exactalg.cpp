#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toral/matrix.hpp"
#include "toral/numeric.hpp"
#include "toral/polynomial.hpp"

using namespace toral;

namespace {

IntMatrix m2(long a, long b, long c, long d) {
  IntMatrix m(2);
  m.at(0, 0) = a; m.at(0, 1) = b;
  m.at(1, 0) = c; m.at(1, 1) = d;
  return m;
}

IntPolynomial poly(std::vector<long> high_first) {
  std::vector<Int> c;
  for (long x : high_first) c.emplace_back(x);
  return IntPolynomial::from_coeffs(c);
}

} // namespace

TEST_CASE("matrix parse and format round-trip") {
  IntMatrix a = IntMatrix::parse("0,-2;1,2");
  CHECK(a.dim() == 2);
  CHECK(a.at(0, 1) == -2);
  CHECK(a.format() == "0,-2;1,2");
  CHECK(IntMatrix::parse(" 2 , 1 ; 0 , 2 ") == m2(2, 1, 0, 2));
  CHECK_THROWS(IntMatrix::parse("1,2;3"));
  CHECK_THROWS(IntMatrix::parse("1,x;3,4"));
}

TEST_CASE("char_poly worked examples") {
  // [[2,1],[0,2]] -> x^2 - 4x + 4
  CHECK(char_poly(m2(2, 1, 0, 2)) == poly({1, -4, 4}));
  // [[0,-2],[1,2]] -> x^2 - 2x + 2
  CHECK(char_poly(m2(0, -2, 1, 2)) == poly({1, -2, 2}));
  // 3x3 identity -> (x-1)^3
  CHECK(char_poly(IntMatrix::identity(3)) == poly({1, -3, 3, -1}));
}

TEST_CASE("Cayley-Hamilton on random small matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> entry(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 1 + static_cast<int>(rng() % 4);
    IntMatrix a(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a.at(i, j) = entry(rng);
    IntPolynomial chi = char_poly(a);
    CHECK(chi.is_monic());
    CHECK(chi.degree() == d);
    IntMatrix z = chi.eval(a);
    CHECK(z == IntMatrix(d));
    // Constant term = (-1)^d det, det computed independently by Bareiss.
    Int expected = (d % 2 == 0) ? a.det() : -a.det();
    CHECK(chi.coeff(0) == expected);
  }
}

TEST_CASE("integer_roots worked examples") {
  auto r1 = integer_roots(poly({1, -5, 6}));
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == std::pair<Int, int>(Int(2), 1));
  CHECK(r1[1] == std::pair<Int, int>(Int(3), 1));

  CHECK(integer_roots(poly({1, -2, 2})).empty());

  auto r3 = integer_roots(poly({1, -4, 4}));
  REQUIRE(r3.size() == 1);
  CHECK(r3[0] == std::pair<Int, int>(Int(2), 2));
}

TEST_CASE("integer_roots on higher degree and edge shapes") {
  // (x-1)(x+2)^2 x^2 = x^5 +3x^4 -5x^2 ... build explicitly
  IntPolynomial p = poly({1, -1}) * poly({1, 2}) * poly({1, 2}) * poly({1, 0}) * poly({1, 0});
  auto r = integer_roots(p);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == std::pair<Int, int>(Int(-2), 2));
  CHECK(r[1] == std::pair<Int, int>(Int(0), 2));
  CHECK(r[2] == std::pair<Int, int>(Int(1), 1));

  // No integer roots but real irrational ones: x^2 - 2
  CHECK(integer_roots(poly({1, 0, -2})).empty());
  // Degree 3 with a large root: (x - 4096)(x^2 + 1)
  IntPolynomial q = poly({1, -4096}) * poly({1, 0, 1});
  auto rq = integer_roots(q);
  REQUIRE(rq.size() == 1);
  CHECK(rq[0].first == 4096);
}

TEST_CASE("integer_roots validated by direct evaluation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int trial = 0; trial < 150; ++trial) {
    int deg = 1 + static_cast<int>(rng() % 5);
    std::vector<Int> c{Int(1)};
    for (int i = 0; i < deg; ++i) c.emplace_back(entry(rng));
    IntPolynomial p = IntPolynomial::from_coeffs(c);
    auto roots = integer_roots(p);
    Int bound = 1;
    for (int k = 0; k < deg; ++k) bound = std::max(bound, Int(abs(p.coeff(k)) + 1));
    // Every reported root really is one, with the right multiplicity...
    for (const auto& [root, mult] : roots) {
      IntPolynomial q = p;
      for (int i = 0; i < mult; ++i) {
        CHECK(q.eval(root) == 0);
        q = q.deflate(root);
      }
      CHECK(q.eval(root) != 0);
    }
    // ...and no integer root inside the Cauchy bound is missed.
    for (Int x = -bound; x <= bound; ++x) {
      bool is_root = (p.eval(x) == 0);
      bool reported = false;
      for (const auto& [root, mult] : roots) reported |= (root == x);
      CHECK(is_root == reported);
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({1, -1}));
  CHECK(cyclotomic(4) == poly({1, 0, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  for (long m = 1; m <= 200; ++m)
    CHECK(cyclotomic(m).degree() == totient(m));
  // Product identity over divisors, exact.
  for (long n : {1L, 2L, 6L, 12L, 30L, 36L, 60L, 100L, 144L, 200L}) {
    IntPolynomial prod = IntPolynomial::from_coeffs({Int(1)});
    for (long m = 1; m <= n; ++m)
      if (n % m == 0) prod = prod * cyclotomic(m);
    CHECK(prod == IntPolynomial::x_power_minus_one(static_cast<int>(n)));
  }
}

TEST_CASE("totient preimages") {
  auto p2 = totient_preimage_upto(2);
  CHECK(p2[1] == std::vector<long>{1, 2});
  CHECK(p2[2] == std::vector<long>{3, 4, 6});
  auto p4 = totient_preimage_upto(4);
  CHECK(p4[4] == std::vector<long>{5, 8, 10, 12});
}

TEST_CASE("mat_pow") {
  IntMatrix a = m2(0, -2, 1, 2);
  IntMatrix a4 = mat_pow(a, 4);
  CHECK(a4 == m2(-4, 0, 0, -4));
  CHECK(mat_pow(a, 0) == IntMatrix::identity(2));
  // chi_A divides x^4 + 4 (A^4 = -4I).
  IntPolynomial x4p4 = poly({1, 0, 0, 0, 4});
  CHECK(x4p4.divide_exact(char_poly(a)) * char_poly(a) == x4p4);
  // Jordan block power formula [[2,1],[0,2]]^n = [[2^n, n 2^(n-1)],[0, 2^n]].
  for (unsigned long n = 1; n <= 16; ++n) {
    IntMatrix jn = mat_pow(m2(2, 1, 0, 2), n);
    Int p = Int(1) << (n - 1);
    IntMatrix expected(2);
    expected.at(0, 0) = 2 * p;
    expected.at(0, 1) = Int(static_cast<long>(n)) * p;
    expected.at(1, 1) = 2 * p;
    CHECK(jn == expected);
  }
}

TEST_CASE("determinant, rank, kernel, inverse") {
  IntMatrix a = m2(2, 4, 1, 2);
  CHECK(a.det() == 0);
  CHECK(a.rank() == 1);
  auto kernel = integer_kernel_basis(a);
  REQUIRE(kernel.size() == 1);
  CHECK(kernel[0] == std::vector<Int>{Int(2), Int(-1)});

  IntMatrix b = m2(3, 1, 1, 2);
  RatMatrix binv = inverse(b);
  CHECK(RatMatrix(b) * binv == RatMatrix::identity(2));

  IntMatrix s = IntMatrix::identity(3) * Int(5);
  CHECK(s.det() == 125);
  CHECK(integer_kernel_basis(IntMatrix(2)).size() == 2);
}

TEST_CASE("polynomial zero handling and serialization order") {
  IntPolynomial z;
  CHECK(z.is_zero());
  CHECK_THROWS(z.degree());
  IntPolynomial p = poly({1, -4, 4});
  auto c = p.coeffs_high_first();
  CHECK(c == std::vector<Int>{Int(1), Int(-4), Int(4)});
  CHECK((p - p).is_zero());
}

TEST_CASE("decimal_string is exact and stable") {
  CHECK(decimal_string(make_rat(Int(1), Int(32)), 12) == "0.03125");
  CHECK(decimal_string(make_rat(Int(-5), Int(64)), 12) == "-0.078125");
  CHECK(decimal_string(make_rat(Int(1), Int(3)), 12) == "0.333333333333");
  CHECK(decimal_string(Rat(7), 12) == "7");
  CHECK(decimal_string(make_rat(Int(-3), Int(2)), 12) == "-1.5");
}
