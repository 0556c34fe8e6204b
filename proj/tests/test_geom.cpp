#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toral/geom.hpp"

using namespace toral;

namespace {

Rat q(long n, long d = 1) { return make_rat(Int(n), Int(d)); }

ConvexTile unit_square() { return ConvexTile::box({q(0), q(0)}, {q(1), q(1)}); }

} // namespace

TEST_CASE("basic polygon measures") {
  ConvexTile s = unit_square();
  CHECK(s.volume() == q(1));
  CHECK(s.diam2() == q(2));
  CHECK(s.barycenter() == Vec{q(1, 2), q(1, 2)});
  auto [lo, hi] = s.bbox();
  CHECK(lo == Vec{q(0), q(0)});
  CHECK(hi == Vec{q(1), q(1)});

  ConvexTile iv = ConvexTile::box({q(0)}, {q(1, 2)});
  CHECK(iv.volume() == q(1, 2));
  CHECK(iv.diam2() == q(1, 4));
}

TEST_CASE("hull normalizes orientation and collinear points") {
  ConvexTile t = ConvexTile::from_points(
      2, {{q(0), q(0)}, {q(2), q(0)}, {q(1), q(0)}, {q(2), q(2)}, {q(0), q(2)}, {q(1), q(1)}});
  CHECK(t.vertices().size() == 4);
  CHECK(t.volume() == q(4));
  CHECK_THROWS(ConvexTile::from_points(2, {{q(0), q(0)}, {q(1), q(1)}, {q(2), q(2)}}));
}

TEST_CASE("intersection of squares") {
  ConvexTile a = unit_square();
  ConvexTile b = a.translated({q(1, 2), q(1, 2)});
  auto i = a.intersect(b);
  REQUIRE(i.has_value());
  CHECK(i->volume() == q(1, 4));
  // Edge contact: zero-volume intersection reported as empty, but touching.
  ConvexTile c = a.translated({q(1), q(0)});
  CHECK_FALSE(a.intersect(c).has_value());
  CHECK(a.intersection_volume(c) == q(0));
  CHECK(a.touches(c));
  // Corner contact.
  ConvexTile d = a.translated({q(1), q(1)});
  CHECK(a.touches(d));
  CHECK_FALSE(a.intersect(d).has_value());
  // Clearly apart.
  ConvexTile e = a.translated({q(3), q(0)});
  CHECK_FALSE(a.touches(e));
}

TEST_CASE("sheared transforms stay exact") {
  RatMatrix shear(2);
  shear.at(0, 0) = q(1); shear.at(0, 1) = q(1);
  shear.at(1, 1) = q(1);
  ConvexTile p = unit_square().transformed(shear);
  CHECK(p.volume() == q(1));
  CHECK(p.diam2() == q(5));
  RatMatrix flip(2);
  flip.at(0, 0) = q(-2);
  flip.at(1, 1) = q(1);
  ConvexTile f = unit_square().transformed(flip);
  CHECK(f.volume() == q(2));
}

TEST_CASE("intersection volume is symmetric and bounded, randomized") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> coord(-8, 8);
  auto rand_tile = [&]() {
    std::vector<Vec> pts;
    for (int i = 0; i < 6; ++i) pts.push_back({q(coord(rng), 4), q(coord(rng), 4)});
    return pts;
  };
  int made = 0;
  while (made < 80) {
    ConvexTile a(unit_square()), b(unit_square());
    try {
      a = ConvexTile::from_points(2, rand_tile());
      b = ConvexTile::from_points(2, rand_tile());
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++made;
    Rat vab = a.intersection_volume(b);
    Rat vba = b.intersection_volume(a);
    CHECK(vab == vba);
    CHECK(vab <= a.volume());
    CHECK(vab <= b.volume());
    if (sign(vab) > 0) CHECK(a.touches(b));
    // Consistency: positive-volume overlap implies not separated; separated
    // implies zero overlap.
    if (!a.touches(b)) CHECK(sign(vab) == 0);
  }
}

TEST_CASE("interval geometry") {
  ConvexTile a = ConvexTile::box({q(0)}, {q(1, 2)});
  ConvexTile b = a.translated({q(1, 2)});
  CHECK_FALSE(a.intersect(b).has_value());
  CHECK(a.touches(b));
  CHECK(a.intersection_volume(a) == q(1, 2));
  RatMatrix two(1);
  two.at(0, 0) = q(2);
  CHECK(a.transformed(two).volume() == q(1));
  RatMatrix neg(1);
  neg.at(0, 0) = q(-2);
  ConvexTile n = a.transformed(neg);
  CHECK(n.volume() == q(1));
  CHECK(n.vertices()[0][0] == q(-1));
}
