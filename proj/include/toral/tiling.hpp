#pragma once

// Markov tilings of R^d (d <= 2): Z^d-translation-invariant tilings by convex
// rational tiles whose A-images decompose exactly into tiles. Prototiles are
// one representative per Z^d-orbit, normalized so the vertex average lies in
// [0,1)^d. Construction covers the diagonal grid, similarity transport, and
// power refinement; verify_tiling checks all four axioms in exact arithmetic.

#include <optional>
#include <string>
#include <vector>

#include "toral/geom.hpp"
#include "toral/matrix.hpp"

namespace toral {

struct Prototile {
  int id;
  ConvexTile shape;
};

struct Tiling {
  IntMatrix matrix;  // the endomorphism this tiling serves
  std::vector<Prototile> prototiles;
  int dim() const { return matrix.dim(); }
};

struct AxiomResult {
  bool pass = true;
  std::string witness;  // empty when the axiom holds
};

struct VerificationReport {
  AxiomResult translation_invariance;  // covering + disjointness in normal form
  AxiomResult finiteness;
  AxiomResult smallness;
  AxiomResult markov_property;
  bool passed = false;
};

struct Partition {
  IntMatrix matrix;
  std::vector<Prototile> rectangles;  // one per Z^d-orbit, on the torus
};

// Spatial index over the full tiling {P + v : P prototile, v in Z^d};
// candidate queries are a superset filter, exact tests come after.
class TileIndex {
 public:
  TileIndex(const std::vector<Prototile>& protos, int dim);
  struct Hit {
    int proto;
    std::vector<Int> shift;
  };
  std::vector<Hit> candidates(const Vec& lo, const Vec& hi) const;

 private:
  int dim_;
  long grid_;
  std::vector<std::vector<std::pair<int, std::array<long, 2>>>> buckets_;
  size_t bucket_of(long cx, long cy) const;
};

// Cube grid of side 1/K with K minimal subject to K >= |det D| and the
// smallness bounds (exact: d < K^2 and sum d_i^2 <= K^2).
Tiling diagonal_tiling(const IntMatrix& d);

// Plain 1/K cube grid for an arbitrary matrix; not validated here.
Tiling unit_grid_tiling(const IntMatrix& a, long k);

// (1/K) T C for B = T A T^{-1}, K the smallest multiple of |det T| giving
// smallness. Checks the similarity exactly via B T = T A.
Tiling similarity_tiling(const IntMatrix& b, const IntMatrix& t, const Tiling& c);

// Common refinement of C, A C, ..., A^{k-1} C after pre-scaling C by 1/m with
// m the smallest multiple of the translation-invariance constant (the lcm of
// the denominators of A^{-j}, j < k) for which the result is small.
Tiling power_refinement(const IntMatrix& a, const Tiling& c, long k);

VerificationReport verify_tiling(const IntMatrix& a, const Tiling& c);

// The whole pipeline: n_A, exact rational diagonalization of A^{n_A},
// diagonal grid, similarity transport, power refinement.
Tiling construct_linear_partition(const IntMatrix& a);

Partition project_partition(const Tiling& c,
                            const VerificationReport* pre_verified = nullptr);

} // namespace toral
