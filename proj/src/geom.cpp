#include "toral/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace toral {

namespace {

Rat cross(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain; strict turns only, so collinear points drop out.
std::vector<Vec> convex_hull(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n < 3) return {};
  std::vector<Vec> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && sign(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && sign(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;  // counterclockwise
}

Rat shoelace2(const std::vector<Vec>& v) {
  Rat s(0);
  for (size_t i = 0; i < v.size(); ++i) {
    const Vec& a = v[i];
    const Vec& b = v[(i + 1) % v.size()];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return s;  // twice the signed area
}

// Clip a convex polygon against the half-plane n.x <= c.
std::vector<Vec> clip_halfplane(const std::vector<Vec>& poly, const Vec& n, const Rat& c) {
  std::vector<Vec> out;
  size_t m = poly.size();
  for (size_t i = 0; i < m; ++i) {
    const Vec& cur = poly[i];
    const Vec& nxt = poly[(i + 1) % m];
    Rat dc = n[0] * cur[0] + n[1] * cur[1] - c;
    Rat dn = n[0] * nxt[0] + n[1] * nxt[1] - c;
    int sc = sign(dc), sn = sign(dn);
    if (sc <= 0) out.push_back(cur);
    if ((sc < 0 && sn > 0) || (sc > 0 && sn < 0)) {
      Rat t = dc / (dc - dn);
      out.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
    }
  }
  return out;
}

} // namespace

ConvexTile ConvexTile::from_points(int dim, std::vector<Vec> points) {
  if (dim == 1) {
    if (points.empty()) throw std::invalid_argument("no points");
    Rat lo = points[0][0], hi = points[0][0];
    for (const Vec& p : points) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    if (lo >= hi) throw std::invalid_argument("degenerate interval");
    return ConvexTile(1, {{lo}, {hi}});
  }
  if (dim != 2) throw std::invalid_argument("only dimensions 1 and 2 are supported");
  std::vector<Vec> hull = convex_hull(std::move(points));
  if (hull.size() < 3 || sign(shoelace2(hull)) <= 0)
    throw std::invalid_argument("degenerate polygon");
  // Canonical start: lexicographically smallest vertex first.
  size_t best = 0;
  for (size_t i = 1; i < hull.size(); ++i)
    if (hull[i][0] < hull[best][0] ||
        (hull[i][0] == hull[best][0] && hull[i][1] < hull[best][1]))
      best = i;
  std::rotate(hull.begin(), hull.begin() + static_cast<long>(best), hull.end());
  return ConvexTile(2, std::move(hull));
}

ConvexTile ConvexTile::box(const Vec& lo, const Vec& hi) {
  if (lo.size() == 1) return from_points(1, {{lo[0]}, {hi[0]}});
  return from_points(2, {{lo[0], lo[1]}, {hi[0], lo[1]}, {hi[0], hi[1]}, {lo[0], hi[1]}});
}

Rat ConvexTile::volume() const {
  if (dim_ == 1) return v_[1][0] - v_[0][0];
  Rat s = shoelace2(v_);
  return s / 2;
}

Rat ConvexTile::diam2() const {
  if (dim_ == 1) {
    Rat d = v_[1][0] - v_[0][0];
    return d * d;
  }
  Rat best(0);
  for (size_t i = 0; i < v_.size(); ++i)
    for (size_t j = i + 1; j < v_.size(); ++j) {
      Rat dx = v_[i][0] - v_[j][0];
      Rat dy = v_[i][1] - v_[j][1];
      Rat d = dx * dx + dy * dy;
      if (d > best) best = d;
    }
  return best;
}

Vec ConvexTile::barycenter() const {
  Vec c(static_cast<size_t>(dim_), Rat(0));
  for (const Vec& p : v_)
    for (int k = 0; k < dim_; ++k) c[static_cast<size_t>(k)] += p[static_cast<size_t>(k)];
  Rat inv = make_rat(Int(1), Int(static_cast<long>(v_.size())));
  for (auto& x : c) x *= inv;
  return c;
}

std::pair<Vec, Vec> ConvexTile::bbox() const {
  Vec lo = v_[0], hi = v_[0];
  for (const Vec& p : v_)
    for (int k = 0; k < dim_; ++k) {
      lo[static_cast<size_t>(k)] = std::min(lo[static_cast<size_t>(k)], p[static_cast<size_t>(k)]);
      hi[static_cast<size_t>(k)] = std::max(hi[static_cast<size_t>(k)], p[static_cast<size_t>(k)]);
    }
  return {lo, hi};
}

ConvexTile ConvexTile::translated(const Vec& t) const {
  std::vector<Vec> w = v_;
  for (Vec& p : w)
    for (int k = 0; k < dim_; ++k) p[static_cast<size_t>(k)] += t[static_cast<size_t>(k)];
  return ConvexTile(dim_, std::move(w));
}

ConvexTile ConvexTile::scaled(const Rat& s) const {
  if (sign(s) == 0) throw std::invalid_argument("scaling by zero");
  std::vector<Vec> w = v_;
  for (Vec& p : w)
    for (auto& x : p) x *= s;
  if (sign(s) > 0) return ConvexTile(dim_, std::move(w));
  return from_points(dim_, std::move(w));  // reflection: re-orient
}

ConvexTile ConvexTile::transformed(const RatMatrix& m) const {
  std::vector<Vec> w;
  w.reserve(v_.size());
  for (const Vec& p : v_) w.push_back(m.apply(p));
  return from_points(dim_, std::move(w));  // may flip orientation
}

std::optional<ConvexTile> ConvexTile::intersect(const ConvexTile& o) const {
  if (dim_ == 1) {
    Rat lo = std::max(v_[0][0], o.v_[0][0]);
    Rat hi = std::min(v_[1][0], o.v_[1][0]);
    if (lo >= hi) return std::nullopt;
    return ConvexTile(1, {{lo}, {hi}});
  }
  std::vector<Vec> poly = v_;
  for (size_t i = 0; i < o.v_.size() && !poly.empty(); ++i) {
    const Vec& a = o.v_[i];
    const Vec& b = o.v_[(i + 1) % o.v_.size()];
    // Interior of o lies left of a->b: normal (b.y - a.y, a.x - b.x), keep
    // n.x <= n.a ... with outward normal (dy, -dx).
    Vec n{b[1] - a[1], a[0] - b[0]};
    Rat c = n[0] * a[0] + n[1] * a[1];
    poly = clip_halfplane(poly, n, c);
  }
  if (poly.size() < 3) return std::nullopt;
  std::vector<Vec> hull = convex_hull(std::move(poly));
  if (hull.size() < 3 || sign(shoelace2(hull)) <= 0) return std::nullopt;
  return from_points(2, std::move(hull));
}

Rat ConvexTile::intersection_volume(const ConvexTile& o) const {
  auto i = intersect(o);
  return i ? i->volume() : Rat(0);
}

bool ConvexTile::touches(const ConvexTile& o) const {
  if (dim_ == 1)
    return std::max(v_[0][0], o.v_[0][0]) <= std::min(v_[1][0], o.v_[1][0]);
  auto separated_along = [](const Vec& axis, const ConvexTile& p, const ConvexTile& q) {
    Rat pmin, pmax, qmin, qmax;
    bool first = true;
    for (const Vec& v : p.vertices()) {
      Rat d = axis[0] * v[0] + axis[1] * v[1];
      if (first || d < pmin) pmin = d;
      if (first || d > pmax) pmax = d;
      first = false;
    }
    first = true;
    for (const Vec& v : q.vertices()) {
      Rat d = axis[0] * v[0] + axis[1] * v[1];
      if (first || d < qmin) qmin = d;
      if (first || d > qmax) qmax = d;
      first = false;
    }
    return pmax < qmin || qmax < pmin;
  };
  for (const ConvexTile* t : {this, &o}) {
    const auto& verts = t->vertices();
    for (size_t i = 0; i < verts.size(); ++i) {
      const Vec& a = verts[i];
      const Vec& b = verts[(i + 1) % verts.size()];
      Vec axis{b[1] - a[1], a[0] - b[0]};
      if (separated_along(axis, *this, o)) return false;
    }
  }
  return true;
}

std::string ConvexTile::key() const {
  std::string s;
  for (const Vec& p : v_) {
    for (const Rat& x : p) {
      s += x.get_str();
      s += ',';
    }
    s += ';';
  }
  return s;
}

} // namespace toral
