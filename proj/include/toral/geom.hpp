#pragma once

// Exact convex geometry over the rationals, in dimensions 1 and 2. Tiles are
// closed convex polytopes: intervals (d = 1) or polygons with counterclockwise
// vertex order and no collinear triples (d = 2). Every predicate here is
// exact; there is no epsilon anywhere.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toral/matrix.hpp"
#include "toral/numeric.hpp"

namespace toral {

using Vec = std::vector<Rat>;

class ConvexTile {
 public:
  // Builds the convex hull of the given points; throws std::invalid_argument
  // if the hull is degenerate (zero volume).
  static ConvexTile from_points(int dim, std::vector<Vec> points);
  static ConvexTile box(const Vec& lo, const Vec& hi);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return v_; }

  Rat volume() const;      // area for d = 2, length for d = 1
  Rat diam2() const;       // squared diameter, attained at vertex pairs
  Vec barycenter() const;  // vertex average (translation-equivariant)
  std::pair<Vec, Vec> bbox() const;

  ConvexTile translated(const Vec& t) const;
  ConvexTile scaled(const Rat& s) const;
  ConvexTile transformed(const RatMatrix& m) const;  // invertible linear map

  // Intersection with positive volume, or nullopt when the interiors miss.
  std::optional<ConvexTile> intersect(const ConvexTile& o) const;
  Rat intersection_volume(const ConvexTile& o) const;

  // Closed-set contact (shared boundary points count), by exact separating
  // axis test over the edge normals of both tiles.
  bool touches(const ConvexTile& o) const;

  bool operator==(const ConvexTile& o) const { return dim_ == o.dim_ && v_ == o.v_; }

  // Canonical serialization of the vertex list, usable as a hash key.
  std::string key() const;

 private:
  ConvexTile(int dim, std::vector<Vec> verts) : dim_(dim), v_(std::move(verts)) {}
  int dim_;
  std::vector<Vec> v_;
};

} // namespace toral
