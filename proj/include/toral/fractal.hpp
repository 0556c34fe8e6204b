#pragma once

// Edge-substitution construction of hybrid Markov partitions for Jordan
// blocks J = [[k,1],[0,k]]. All geometry lives at a finite refinement level n
// in J^n-coordinates as exact integer lattice paths and polyominoes; the
// fractal limit object is never represented.
//
// The k = 2 substitution a -> "aa", b -> "bba" is certified against the
// level-5 curve; the generalization b -> b^k a for k >= 3 is validated only
// by the abelianization and self-avoidance invariants.

#include <array>
#include <string>
#include <vector>

#include "toral/matrix.hpp"

namespace toral {

using Cell = std::array<long, 2>;

struct SubstitutionSystem {
  long k;
  std::string rule_a;
  std::string rule_b;

  static SubstitutionSystem canonical(long k);

  // sigma^n(b) under this system's rules.
  std::string word(long n) const;

  // Partial-sum lattice path of word(n): a = (1,0), b = (0,1).
  std::vector<Cell> polyline(long n) const;
};

struct LatticePolyline {
  long level;
  std::vector<Cell> points;  // from (0,0) to J^n (0,1) = (n k^(n-1), k^n)
};

struct FractalTileApprox {
  long level;
  std::array<long, 2> digit;  // (i, j) in {0..k-1}^2
  long id;                    // i + k * j
  std::vector<Cell> cells;    // sorted; exactly k^(2n) cells
};

std::string substitution_word(long k, long n);

LatticePolyline boundary_polyline(long k, long n);

// The k^2 level-n polyomino approximations: between the stacked boundary
// curve at horizontal offsets i k^n and (i+1) k^n, within the strip
// j k^n <= y < (j+1) k^n. Tile (i,j) approximates J(T'_(i,j)) = T + (i,j)
// where T'_d are the partition tiles, in J^n-coordinates.
std::vector<FractalTileApprox> bedford_tiles(long k, long n);

// Self-affinity: J maps the level-n curve onto a subsequence of the
// level-(n+1) curve whose gaps spell exactly the substituted edges.
bool substitution_commutation_check(long k, long n);

IntMatrix jordan_block(long k);

} // namespace toral
