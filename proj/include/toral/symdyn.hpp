#pragma once

// Symbolic dynamics over a partition: transition matrix, boundary adjacency,
// the doubled shift E2, entropy via the Perron eigenvalue, exact word counts,
// and the Hausdorff-dimension upper bound h(E2)/log(lambda).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toral/fractal.hpp"
#include "toral/tiling.hpp"

namespace toral {

// 0/1 square matrix as a digraph with sorted successor lists.
struct BitMatrix {
  std::size_t size = 0;
  std::vector<std::vector<std::uint32_t>> succ;

  explicit BitMatrix(std::size_t n = 0) : size(n), succ(n) {}
  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j);
  std::size_t edge_count() const;
  std::vector<std::size_t> row_sums() const;
  bool operator==(const BitMatrix& o) const { return size == o.size && succ == o.succ; }
};

struct TransitionMatrix {
  BitMatrix bits;
};

using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

struct DoubledShift {
  std::vector<IndexPair> vertices;  // ordered pairs (a,b), a != b, touching
  BitMatrix edges;                  // (a,b) -> (c,d) iff T(a,c) = T(b,d) = 1
};

struct DimensionReport {
  double entropy_e2 = 0;
  double log_lambda = 0;
  double bound = 0;
  std::string lambda_source;  // "min-eigenvalue-modulus" or "user-supplied"
  double tolerance = 0;
  bool degenerate = false;    // empty doubled shift
  bool approximate = false;   // fractal level not yet stabilized
  std::size_t e2_vertices = 0;
  std::size_t e2_edges = 0;
};

// T(i,j) = 1 iff A R_i meets the interior of some Z^d-translate of R_j,
// decided by exact intersection volumes.
TransitionMatrix transition_matrix(const Partition& p, const IntMatrix& a);

// Ordered pairs of distinct rectangles with touching closures on the torus;
// corner contact counts.
std::vector<IndexPair> adjacency_pairs(const Partition& p);

DoubledShift doubled_shift(const TransitionMatrix& t, const std::vector<IndexPair>& pairs);

// Perron eigenvalue within tol: strongly connected components, then power
// iteration on (block + I) with Collatz-Wielandt enclosure, minus 1.
double spectral_radius(const BitMatrix& m, double tol = 1e-9);

// Exact number of length-n allowed words: sum of the entries of M^(n-1).
Int count_words(const BitMatrix& m, long n);

DimensionReport hausdorff_upper_bound(const Partition& p, const IntMatrix& a,
                                      std::optional<double> lambda_override = std::nullopt,
                                      double tol = 1e-9);

// Fractal-partition counterparts, computed at finite level by exact integer
// cell arithmetic. The transition matrix comes from decomposing the level-n
// tiles into translated level-(n-1) tiles; level >= 1.
TransitionMatrix bedford_transition_matrix(long k, long level);
std::vector<IndexPair> bedford_adjacency_pairs(long k, long level);

// Includes a stabilization check against level-1; when the transition matrix
// or adjacency differ between the two levels the report is flagged
// approximate. level >= 2.
DimensionReport bedford_upper_bound(long k, long level,
                                    std::optional<double> lambda_override = std::nullopt,
                                    double tol = 1e-9);

} // namespace toral
