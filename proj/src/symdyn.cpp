#include "toral/symdyn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "toral/errors.hpp"
#include "toral/spectra.hpp"

namespace toral {

bool BitMatrix::get(std::size_t i, std::size_t j) const {
  const auto& row = succ[i];
  return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(j));
}

void BitMatrix::set(std::size_t i, std::size_t j) {
  auto& row = succ[i];
  auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(j));
  if (it == row.end() || *it != j) row.insert(it, static_cast<std::uint32_t>(j));
}

std::size_t BitMatrix::edge_count() const {
  std::size_t n = 0;
  for (const auto& row : succ) n += row.size();
  return n;
}

std::vector<std::size_t> BitMatrix::row_sums() const {
  std::vector<std::size_t> r;
  r.reserve(size);
  for (const auto& row : succ) r.push_back(row.size());
  return r;
}

namespace {

Vec int_vec(const std::vector<Int>& v) {
  Vec r;
  r.reserve(v.size());
  for (const Int& x : v) r.push_back(Rat(x));
  return r;
}

// Iterative Tarjan; the doubled shift can have hundreds of thousands of nodes.
std::vector<std::vector<std::uint32_t>> strongly_connected_components(const BitMatrix& m) {
  const std::uint32_t none = UINT32_MAX;
  std::size_t n = m.size;
  std::vector<std::uint32_t> index(n, none), low(n, 0);
  std::vector<bool> onstack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> comps;
  std::uint32_t counter = 0;
  struct Frame {
    std::uint32_t v;
    std::size_t child;
  };
  std::vector<Frame> dfs;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != none) continue;
    dfs.push_back({root, 0});
    while (!dfs.empty()) {
      Frame& f = dfs.back();
      std::uint32_t v = f.v;
      if (f.child == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        onstack[v] = true;
      }
      bool descended = false;
      while (f.child < m.succ[v].size()) {
        std::uint32_t w = m.succ[v][f.child++];
        if (index[w] == none) {
          dfs.push_back({w, 0});
          descended = true;
          break;
        }
        if (onstack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        std::vector<std::uint32_t> comp;
        while (true) {
          std::uint32_t w = stack.back();
          stack.pop_back();
          onstack[w] = false;
          comp.push_back(w);
          if (w == v) break;
        }
        comps.push_back(std::move(comp));
      }
      std::uint32_t done = v;
      dfs.pop_back();
      if (!dfs.empty()) low[dfs.back().v] = std::min(low[dfs.back().v], low[done]);
    }
  }
  return comps;
}

// Collatz-Wielandt enclosure of the Perron value of (block + I); the +I shift
// makes a nontrivial strongly connected block primitive, so the bracket
// converges geometrically.
double component_rho(const BitMatrix& m, const std::vector<std::uint32_t>& comp, double tol) {
  if (comp.size() == 1) return m.get(comp[0], comp[0]) ? 1.0 : 0.0;
  std::vector<std::uint32_t> local(m.size, 0);
  for (std::uint32_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
  std::vector<std::vector<std::uint32_t>> adj(comp.size());
  for (std::uint32_t i = 0; i < comp.size(); ++i)
    for (std::uint32_t w : m.succ[comp[i]])
      if (std::binary_search(comp.begin(), comp.end(), w)) adj[i].push_back(local[w]);
  std::size_t n = comp.size();
  std::vector<double> x(n, 1.0), y(n);
  double lo = 0, hi = 0;
  for (long iter = 0; iter < 200000; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = x[i];  // the +I shift
      for (std::uint32_t j : adj[i]) s += x[j];
      y[i] = s;
    }
    lo = y[0] / x[0];
    hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (hi - lo < tol * 1e-3) break;
    double norm = 0;
    for (double v : y) norm += v;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  return (lo + hi) / 2.0 - 1.0;
}

} // namespace

double spectral_radius(const BitMatrix& m, double tol) {
  if (m.size == 0) return 0.0;
  double best = 0.0;
  for (auto& comp : strongly_connected_components(m)) {
    std::sort(comp.begin(), comp.end());
    best = std::max(best, component_rho(m, comp, tol));
  }
  return best;
}

Int count_words(const BitMatrix& m, long n) {
  if (n < 1) throw std::invalid_argument("word length must be positive");
  std::size_t s = m.size;
  using Dense = std::vector<std::vector<Int>>;
  auto mul = [s](const Dense& a, const Dense& b) {
    Dense r(s, std::vector<Int>(s, Int(0)));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t k = 0; k < s; ++k) {
        if (sign(a[i][k]) == 0) continue;
        for (std::size_t j = 0; j < s; ++j)
          if (sign(b[k][j]) != 0) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  };
  Dense acc(s, std::vector<Int>(s, Int(0)));
  for (std::size_t i = 0; i < s; ++i) acc[i][i] = 1;
  Dense base(s, std::vector<Int>(s, Int(0)));
  for (std::size_t i = 0; i < s; ++i)
    for (std::uint32_t j : m.succ[i]) base[i][static_cast<std::size_t>(j)] = 1;
  unsigned long e = static_cast<unsigned long>(n - 1);
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  Int total = 0;
  for (const auto& row : acc)
    for (const Int& v : row) total += v;
  return total;
}

TransitionMatrix transition_matrix(const Partition& p, const IntMatrix& a) {
  int dim = a.dim();
  TransitionMatrix t{BitMatrix(p.rectangles.size())};
  TileIndex index(p.rectangles, dim);
  RatMatrix ra(a);
  for (const auto& r : p.rectangles) {
    ConvexTile image = r.shape.transformed(ra);
    auto [lo, hi] = image.bbox();
    for (const auto& hit : index.candidates(lo, hi)) {
      if (t.bits.get(static_cast<std::size_t>(r.id), static_cast<std::size_t>(hit.proto)))
        continue;
      const ConvexTile& q = p.rectangles[static_cast<std::size_t>(hit.proto)].shape;
      if (sign(image.intersection_volume(q.translated(int_vec(hit.shift)))) > 0)
        t.bits.set(static_cast<std::size_t>(r.id), static_cast<std::size_t>(hit.proto));
    }
  }
  return t;
}

std::vector<IndexPair> adjacency_pairs(const Partition& p) {
  int dim = p.matrix.dim();
  TileIndex index(p.rectangles, dim);
  std::set<IndexPair> pairs;
  for (const auto& r : p.rectangles) {
    auto [lo, hi] = r.shape.bbox();
    for (const auto& hit : index.candidates(lo, hi)) {
      if (hit.proto == r.id) continue;  // ordered pairs need a != b
      auto key = IndexPair(static_cast<std::uint32_t>(r.id), static_cast<std::uint32_t>(hit.proto));
      if (pairs.count(key)) continue;
      const ConvexTile& q = p.rectangles[static_cast<std::size_t>(hit.proto)].shape;
      if (r.shape.touches(q.translated(int_vec(hit.shift)))) pairs.insert(key);
    }
  }
  return std::vector<IndexPair>(pairs.begin(), pairs.end());
}

DoubledShift doubled_shift(const TransitionMatrix& t, const std::vector<IndexPair>& pairs) {
  DoubledShift e2;
  e2.vertices = pairs;
  std::sort(e2.vertices.begin(), e2.vertices.end());
  e2.vertices.erase(std::unique(e2.vertices.begin(), e2.vertices.end()), e2.vertices.end());
  std::map<IndexPair, std::uint32_t> id;
  for (std::uint32_t i = 0; i < e2.vertices.size(); ++i) id[e2.vertices[i]] = i;
  e2.edges = BitMatrix(e2.vertices.size());
  for (std::uint32_t i = 0; i < e2.vertices.size(); ++i) {
    auto [a, b] = e2.vertices[i];
    for (std::uint32_t c : t.bits.succ[a])
      for (std::uint32_t d : t.bits.succ[b]) {
        if (c == d) continue;
        auto it = id.find(IndexPair(c, d));
        if (it != id.end()) e2.edges.succ[i].push_back(it->second);
      }
    std::sort(e2.edges.succ[i].begin(), e2.edges.succ[i].end());
  }
  return e2;
}

namespace {

DimensionReport report_from(const DoubledShift& e2, double lambda, const char* source,
                            double tol) {
  if (lambda <= 1.0)
    throw DomainError(Err::NotExpanding, "expansion constant must exceed 1");
  DimensionReport rep;
  rep.e2_vertices = e2.vertices.size();
  rep.e2_edges = e2.edges.edge_count();
  rep.tolerance = tol;
  rep.lambda_source = source;
  rep.log_lambda = std::log(lambda);
  double mu = e2.vertices.empty() ? 0.0 : spectral_radius(e2.edges, tol);
  rep.degenerate = e2.vertices.empty() || mu <= 0.0;
  rep.entropy_e2 = mu > 0 ? std::log(mu) : 0.0;
  rep.bound = rep.entropy_e2 / rep.log_lambda;
  return rep;
}

} // namespace

DimensionReport hausdorff_upper_bound(const Partition& p, const IntMatrix& a,
                                      std::optional<double> lambda_override, double tol) {
  TransitionMatrix t = transition_matrix(p, a);
  std::vector<IndexPair> pairs = adjacency_pairs(p);
  DoubledShift e2 = doubled_shift(t, pairs);
  double lambda = lambda_override ? *lambda_override : min_eigenvalue_modulus(a);
  return report_from(e2, lambda, lambda_override ? "user-supplied" : "min-eigenvalue-modulus",
                     tol);
}

namespace {

// Canonical residue of a cell modulo J^n Z^2 (upper triangular lattice).
Cell reduce_mod_jn(long k, long n, Cell c) {
  long kn = 1;
  for (long i = 0; i < n; ++i) kn *= k;
  long off = (n == 0) ? 0 : n * (kn / k);
  long r2 = ((c[1] % kn) + kn) % kn;
  long v2 = (c[1] - r2) / kn;
  long x = c[0] - off * v2;
  long r1 = ((x % kn) + kn) % kn;
  return {r1, r2};
}

} // namespace

TransitionMatrix bedford_transition_matrix(long k, long level) {
  if (level < 1) throw std::invalid_argument("transition matrix needs level >= 1");
  auto fine = bedford_tiles(k, level);
  auto coarse = bedford_tiles(k, level - 1);
  long kn = 1;
  for (long i = 0; i < level; ++i) kn *= k;
  long off = (level == 0) ? 0 : level * (kn / k);
  TransitionMatrix t{BitMatrix(fine.size())};
  for (const auto& f : fine) {
    Cell shift{kn * f.digit[0] + off * f.digit[1], kn * f.digit[1]};
    std::set<Cell> want(f.cells.begin(), f.cells.end());
    std::size_t covered = 0;
    for (const auto& c : coarse) {
      bool inside = true;
      for (const Cell& cell : c.cells) {
        Cell moved{cell[0] + shift[0], cell[1] + shift[1]};
        if (!want.count(moved)) {
          inside = false;
          break;
        }
      }
      if (inside) {
        t.bits.set(static_cast<std::size_t>(f.id), static_cast<std::size_t>(c.id));
        covered += c.cells.size();
      }
    }
    if (covered != f.cells.size())
      throw std::logic_error("bedford tiles do not decompose exactly across levels");
  }
  return t;
}

std::vector<IndexPair> bedford_adjacency_pairs(long k, long level) {
  auto tiles = bedford_tiles(k, level);
  long n1 = level + 1;
  std::vector<std::set<Cell>> reduced(tiles.size());
  for (const auto& t : tiles)
    for (const Cell& c : t.cells)
      reduced[static_cast<std::size_t>(t.id)].insert(reduce_mod_jn(k, n1, c));
  std::vector<IndexPair> pairs;
  for (const auto& t : tiles)
    for (const auto& s : tiles) {
      if (t.id == s.id) continue;
      bool touch = false;
      const auto& target = reduced[static_cast<std::size_t>(s.id)];
      for (const Cell& c : t.cells) {
        for (long dx = -1; dx <= 1 && !touch; ++dx)
          for (long dy = -1; dy <= 1 && !touch; ++dy)
            if (target.count(reduce_mod_jn(k, n1, {c[0] + dx, c[1] + dy}))) touch = true;
        if (touch) break;
      }
      if (touch)
        pairs.emplace_back(static_cast<std::uint32_t>(t.id), static_cast<std::uint32_t>(s.id));
    }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

DimensionReport bedford_upper_bound(long k, long level, std::optional<double> lambda_override,
                                    double tol) {
  if (level < 2) throw std::invalid_argument("stabilized report needs level >= 2");
  TransitionMatrix t = bedford_transition_matrix(k, level);
  std::vector<IndexPair> pairs = bedford_adjacency_pairs(k, level);
  TransitionMatrix t_prev = bedford_transition_matrix(k, level - 1);
  std::vector<IndexPair> pairs_prev = bedford_adjacency_pairs(k, level - 1);
  DoubledShift e2 = doubled_shift(t, pairs);
  double lambda = lambda_override ? *lambda_override
                                  : std::abs(static_cast<double>(k));
  DimensionReport rep = report_from(
      e2, lambda, lambda_override ? "user-supplied" : "min-eigenvalue-modulus", tol);
  rep.approximate = !(t.bits == t_prev.bits) || pairs != pairs_prev;
  return rep;
}

} // namespace toral
