#include "toral/fractal.hpp"

#include <algorithm>
#include <stdexcept>

#include "toral/errors.hpp"

namespace toral {

namespace {

void check_k(long k) {
  if (k < 2) throw DomainError(Err::UnsupportedK, "substitution needs k >= 2");
  if (k > 16) throw DomainError(Err::UnsupportedK, "k > 16 is outside the validated range");
}

void check_level(long k, long n) {
  if (n < 0) throw std::invalid_argument("level must be non-negative");
  double len = 1.0;
  for (long i = 0; i < n; ++i) len *= static_cast<double>(k);
  if (len * (1.0 + static_cast<double>(n) / static_cast<double>(k)) > 5e7)
    throw std::invalid_argument("level too large for explicit expansion");
}

long ipow(long base, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

} // namespace

SubstitutionSystem SubstitutionSystem::canonical(long k) {
  check_k(k);
  SubstitutionSystem s;
  s.k = k;
  s.rule_a.assign(static_cast<size_t>(k), 'a');
  s.rule_b.assign(static_cast<size_t>(k), 'b');
  s.rule_b += 'a';
  return s;
}

std::string SubstitutionSystem::word(long n) const {
  std::string w = "b";
  for (long step = 0; step < n; ++step) {
    std::string next;
    next.reserve(w.size() * static_cast<size_t>(k + 1));
    for (char c : w) next += (c == 'a') ? rule_a : rule_b;
    w = std::move(next);
  }
  return w;
}

std::vector<Cell> SubstitutionSystem::polyline(long n) const {
  std::string w = word(n);
  std::vector<Cell> pts;
  pts.reserve(w.size() + 1);
  Cell p{0, 0};
  pts.push_back(p);
  for (char c : w) {
    if (c == 'a') ++p[0];
    else ++p[1];
    pts.push_back(p);
  }
  return pts;
}

std::string substitution_word(long k, long n) {
  check_k(k);
  check_level(k, n);
  return SubstitutionSystem::canonical(k).word(n);
}

LatticePolyline boundary_polyline(long k, long n) {
  check_k(k);
  check_level(k, n);
  return LatticePolyline{n, SubstitutionSystem::canonical(k).polyline(n)};
}

std::vector<FractalTileApprox> bedford_tiles(long k, long n) {
  check_k(k);
  check_level(k, n + 1);
  long kn = ipow(k, n);
  // x-offset of the curve's vertical step in each unit row. The stacked curve
  // repeats the level-n polyline with period J^n (0,1) = (n k^(n-1), k^n).
  long chain_dx = (n == 0) ? 0 : n * ipow(k, n - 1);
  std::vector<long> x_of_row(static_cast<size_t>(kn), 0);
  {
    std::string w = SubstitutionSystem::canonical(k).word(n);
    long x = 0, y = 0;
    for (char c : w) {
      if (c == 'a') {
        ++x;
      } else {
        x_of_row[static_cast<size_t>(y)] = x;
        ++y;
      }
    }
  }
  auto chain_x = [&](long row) {
    long m = row / kn;
    long r = row % kn;
    return x_of_row[static_cast<size_t>(r)] + m * chain_dx;
  };
  std::vector<FractalTileApprox> tiles;
  for (long j = 0; j < k; ++j)
    for (long i = 0; i < k; ++i) {
      FractalTileApprox t;
      t.level = n;
      t.digit = {i, j};
      t.id = i + k * j;
      t.cells.reserve(static_cast<size_t>(kn) * static_cast<size_t>(kn));
      for (long row = j * kn; row < (j + 1) * kn; ++row) {
        long x0 = chain_x(row) + i * kn;
        for (long s = 0; s < kn; ++s) t.cells.push_back({x0 + s, row});
      }
      std::sort(t.cells.begin(), t.cells.end());
      tiles.push_back(std::move(t));
    }
  return tiles;
}

bool substitution_commutation_check(long k, long n) {
  check_k(k);
  if (n < 1) throw std::invalid_argument("check needs n >= 1");
  check_level(k, n + 1);
  SubstitutionSystem sys = SubstitutionSystem::canonical(k);
  std::string w = sys.word(n);
  std::vector<Cell> fine = sys.polyline(n + 1);
  // Walk the coarse curve; J maps its i-th point to the fine curve at the
  // cumulative substituted length, and the gap must spell rule(letter).
  size_t pos = 0;
  long x = 0, y = 0;
  auto image = [&](long px, long py) { return Cell{k * px + py, k * py}; };
  if (fine[0] != image(0, 0)) return false;
  for (char c : w) {
    const std::string& rule = (c == 'a') ? sys.rule_a : sys.rule_b;
    for (char rc : rule) {
      Cell prev = fine[pos];
      ++pos;
      if (pos >= fine.size()) return false;
      Cell step = fine[pos];
      long dx = step[0] - prev[0], dy = step[1] - prev[1];
      if (rc == 'a' && (dx != 1 || dy != 0)) return false;
      if (rc == 'b' && (dx != 0 || dy != 1)) return false;
    }
    if (c == 'a') ++x;
    else ++y;
    if (fine[pos] != image(x, y)) return false;
  }
  return pos + 1 == fine.size();
}

IntMatrix jordan_block(long k) {
  IntMatrix j(2);
  j.at(0, 0) = k;
  j.at(0, 1) = 1;
  j.at(1, 1) = k;
  return j;
}

} // namespace toral
