#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "toral/errors.hpp"
#include "toral/fractal.hpp"

using namespace toral;

// Level-5 boundary curve, 113 lattice points, frozen from the reference
// rendering of the k = 2 partition (display transform J^-5).
#include "data/figure3_curve.inc"

namespace {

Cell jn_apply(long k, long n, Cell v) {
  // J^n = [[k^n, n k^(n-1)], [0, k^n]]
  long kn = 1;
  for (long i = 0; i < n; ++i) kn *= k;
  long off = (n == 0) ? 0 : n * (kn / k);
  return {kn * v[0] + off * v[1], kn * v[1]};
}

} // namespace

TEST_CASE("substitution words") {
  CHECK(substitution_word(2, 0) == "b");
  CHECK(substitution_word(2, 1) == "bba");
  CHECK(substitution_word(2, 2) == "bbabbaaa");
  CHECK(substitution_word(3, 1) == "bbba");
  CHECK_THROWS_AS(substitution_word(1, 3), DomainError);
  CHECK_THROWS_AS(substitution_word(-2, 3), DomainError);
}

TEST_CASE("word length recurrence |sigma^n(b)| = 2^n + n 2^(n-1)") {
  for (long n = 0; n <= 20; ++n) {
    unsigned long expect = (1ul << n) + (n == 0 ? 0 : static_cast<unsigned long>(n) << (n - 1));
    CHECK(substitution_word(2, n).size() == expect);
  }
}

TEST_CASE("boundary polyline basics") {
  auto p0 = boundary_polyline(2, 0);
  CHECK(p0.points == std::vector<Cell>{{0, 0}, {0, 1}});
  auto p1 = boundary_polyline(2, 1);
  CHECK(p1.points == std::vector<Cell>{{0, 0}, {0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("figure golden file: level-5 curve matches exactly") {
  auto p5 = boundary_polyline(2, 5);
  REQUIRE(p5.points.size() == 113);
  CHECK(p5.points.front() == Cell{0, 0});
  CHECK(p5.points.back() == Cell{80, 32});
  CHECK(p5.points == kFigure3Curve);
}

TEST_CASE("endpoint equals J^n (0,1) exactly") {
  for (long k : {2L, 3L})
    for (long n = 0; n <= 10; ++n) {
      if (k == 3 && n > 7) break;
      auto p = boundary_polyline(k, n);
      CHECK(p.points.back() == jn_apply(k, n, {0, 1}));
    }
}

TEST_CASE("polyline is self-avoiding") {
  for (long n = 0; n <= 10; ++n) {
    auto p = boundary_polyline(2, n);
    std::set<Cell> distinct(p.points.begin(), p.points.end());
    CHECK(distinct.size() == p.points.size());
  }
}

TEST_CASE("bedford tiles at the coarsest levels") {
  auto t0 = bedford_tiles(2, 0);
  REQUIRE(t0.size() == 4);
  for (const auto& t : t0) {
    CHECK(t.cells.size() == 1);
    CHECK(t.cells[0] == Cell{t.digit[0], t.digit[1]});
  }
  auto t1 = bedford_tiles(2, 1);
  REQUIRE(t1.size() == 4);
  for (const auto& t : t1) CHECK(t.cells.size() == 4);
  CHECK(t1[0].cells == std::vector<Cell>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  // digit (0,1): rows 2..3 start at the stacked curve offset.
  CHECK(t1[2].digit == std::array<long, 2>{0, 1});
  CHECK(t1[2].cells == std::vector<Cell>{{1, 2}, {1, 3}, {2, 2}, {2, 3}});

  CHECK(bedford_tiles(3, 0).size() == 9);
}

TEST_CASE("tile volume accounting") {
  for (long n = 0; n <= 6; ++n) {
    auto tiles = bedford_tiles(2, n);
    REQUIRE(tiles.size() == 4);
    unsigned long per = 1ul << (2 * n);
    unsigned long total = 0;
    for (const auto& t : tiles) {
      CHECK(t.cells.size() == per);
      total += t.cells.size();
    }
    CHECK(total == 1ul << (2 * (n + 1)));
  }
}

TEST_CASE("polyomino markov decomposition across levels") {
  // bedford(n)[d] = disjoint union over e of bedford(n-1)[e] + J^n d.
  for (long k : {2L, 3L}) {
    long nmax = (k == 2) ? 5 : 3;
    for (long n = 1; n <= nmax; ++n) {
      auto fine = bedford_tiles(k, n);
      auto coarse = bedford_tiles(k, n - 1);
      for (const auto& t : fine) {
        Cell shift = jn_apply(k, n, {t.digit[0], t.digit[1]});
        std::set<Cell> want(t.cells.begin(), t.cells.end());
        std::set<Cell> got;
        for (const auto& c : coarse)
          for (const Cell& cell : c.cells) {
            Cell moved{cell[0] + shift[0], cell[1] + shift[1]};
            bool fresh = got.insert(moved).second;
            CHECK(fresh);  // pieces must be disjoint
          }
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("substitution self-affinity check") {
  for (long n = 1; n <= 8; ++n) CHECK(substitution_commutation_check(2, n));
  for (long n = 1; n <= 5; ++n) CHECK(substitution_commutation_check(3, n));
}

TEST_CASE("corrupted rule diverges from the golden curve") {
  SubstitutionSystem bad{2, "aa", "bab"};
  auto path = bad.polyline(1);
  // Endpoint is still (1,2) but the third point disagrees with the curve:
  // (1,1) instead of (0,2).
  CHECK(path.back() == Cell{1, 2});
  CHECK(path[2] == Cell{1, 1});
  CHECK(kFigure3Curve[2] == Cell{0, 2});
  auto path5 = bad.polyline(5);
  bool prefix_matches = true;
  for (size_t i = 0; i < std::min(path5.size(), kFigure3Curve.size()); ++i)
    if (path5[i] != kFigure3Curve[i]) {
      prefix_matches = false;
      CHECK(i == 2);
      break;
    }
  CHECK_FALSE(prefix_matches);
}

TEST_CASE("straight-run shadow at dyadic heights") {
  // The level-n curve runs horizontally for at least 2^(n-j) steps upon
  // reaching height m 2^(n-j) for j < n (finite-level shadow of the straight
  // segments at dyadic rationals).
  long n = 6;
  auto p = boundary_polyline(2, n).points;
  std::map<long, long> run_before_height;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i + 1][1] == p[i][1]) continue;
    // vertical step at height p[i][1]; measure the horizontal run ending here
    long run = 0;
    for (size_t back = i; back > 0 && p[back][1] == p[back - 1][1]; --back) ++run;
    run_before_height[p[i][1]] = run;
  }
  for (long j = 1; j < n; ++j) {
    long scale = 1L << (n - j);
    for (long m = 1; m * scale < (1L << n); ++m) {
      auto it = run_before_height.find(m * scale);
      if (it == run_before_height.end()) continue;
      CHECK(it->second >= scale / 2);
    }
  }
}
