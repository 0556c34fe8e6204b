#include "toral/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "toral/errors.hpp"

namespace toral {

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = d[static_cast<size_t>(i)];
  return m;
}

IntMatrix IntMatrix::parse(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Int> entries;
    std::stringstream rs(row);
    std::string tok;
    while (std::getline(rs, tok, ',')) {
      size_t b = tok.find_first_not_of(" \t");
      size_t e = tok.find_last_not_of(" \t");
      if (b == std::string::npos) throw std::invalid_argument("empty matrix entry");
      std::string t = tok.substr(b, e - b + 1);
      if (t.find_first_not_of("+-0123456789") != std::string::npos)
        throw std::invalid_argument("bad integer entry '" + t + "'");
      entries.emplace_back(t);
    }
    if (entries.empty()) throw std::invalid_argument("empty matrix row");
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  int d = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != d) throw std::invalid_argument("matrix is not square");
  IntMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

std::string IntMatrix::format() const {
  std::string out;
  for (int i = 0; i < dim_; ++i) {
    if (i) out += ";";
    for (int j = 0; j < dim_; ++j) {
      if (j) out += ",";
      out += at(i, j).get_str();
    }
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Int& aik = at(i, k);
      if (sign(aik) == 0) continue;
      for (int j = 0; j < dim_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix r(dim_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix r(dim_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator*(const Int& s) const {
  IntMatrix r(dim_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

Int IntMatrix::det() const {
  // Bareiss: exact integer elimination, previous pivot divides exactly.
  IntMatrix m = *this;
  Int prev = 1;
  int signflip = 1;
  for (int k = 0; k < dim_ - 1; ++k) {
    if (sign(m.at(k, k)) == 0) {
      int p = -1;
      for (int i = k + 1; i < dim_; ++i)
        if (sign(m.at(i, k)) != 0) { p = i; break; }
      if (p < 0) return Int(0);
      for (int j = 0; j < dim_; ++j) std::swap(m.at(k, j), m.at(p, j));
      signflip = -signflip;
    }
    for (int i = k + 1; i < dim_; ++i) {
      for (int j = k + 1; j < dim_; ++j) {
        Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return signflip > 0 ? m.at(dim_ - 1, dim_ - 1) : -m.at(dim_ - 1, dim_ - 1);
}

int IntMatrix::rank() const {
  IntMatrix m = *this;
  int r = 0;
  Int prev = 1;
  for (int c = 0; c < dim_ && r < dim_; ++c) {
    int p = -1;
    for (int i = r; i < dim_; ++i)
      if (sign(m.at(i, c)) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < dim_; ++j) std::swap(m.at(r, j), m.at(p, j));
    for (int i = r + 1; i < dim_; ++i) {
      for (int j = c + 1; j < dim_; ++j) {
        Int v = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

bool IntMatrix::is_diagonal() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (i != j && sign(at(i, j)) != 0) return false;
  return true;
}

bool IntMatrix::is_scalar() const {
  if (!is_diagonal()) return false;
  for (int i = 1; i < dim_; ++i)
    if (at(i, i) != at(0, 0)) return false;
  return true;
}

IntMatrix mat_pow(const IntMatrix& a, unsigned long k) {
  IntMatrix result = IntMatrix::identity(a.dim());
  IntMatrix base = a;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

IntMatrix adjugate(const IntMatrix& a) {
  int d = a.dim();
  if (d == 1) {
    IntMatrix r(1);
    r.at(0, 0) = 1;
    return r;
  }
  IntMatrix r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      IntMatrix minor(d - 1);
      for (int ii = 0, mi = 0; ii < d; ++ii) {
        if (ii == j) continue;
        for (int jj = 0, mj = 0; jj < d; ++jj) {
          if (jj == i) continue;
          minor.at(mi, mj) = a.at(ii, jj);
          ++mj;
        }
        ++mi;
      }
      Int c = minor.det();
      r.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
    }
  return r;
}

RatMatrix inverse(const IntMatrix& a) {
  Int d = a.det();
  if (sign(d) == 0) throw DomainError(Err::NotInvertible, "matrix has determinant 0");
  IntMatrix adj = adjugate(a);
  RatMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = make_rat(adj.at(i, j), d);
  return r;
}

std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& a) {
  int d = a.dim();
  // Rational RREF, then clear denominators and contents per basis vector.
  std::vector<std::vector<Rat>> m(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(a.at(i, j));
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < d && r < d; ++c) {
    int p = -1;
    for (int i = r; i < d; ++i)
      if (sign(m[static_cast<size_t>(i)][static_cast<size_t>(c)]) != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(p)]);
    Rat inv = 1 / m[static_cast<size_t>(r)][static_cast<size_t>(c)];
    for (int j = 0; j < d; ++j) m[static_cast<size_t>(r)][static_cast<size_t>(j)] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == r) continue;
      Rat f = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (sign(f) == 0) continue;
      for (int j = 0; j < d; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<Int>> basis;
  for (int c = 0; c < d; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
    std::vector<Rat> v(static_cast<size_t>(d), Rat(0));
    v[static_cast<size_t>(c)] = 1;
    for (size_t pr = 0; pr < pivot_col.size(); ++pr)
      v[static_cast<size_t>(pivot_col[pr])] = -m[pr][static_cast<size_t>(c)];
    Int den = 1;
    for (const Rat& x : v) den = lcm(den, Int(x.get_den()));
    std::vector<Int> w(static_cast<size_t>(d));
    Int content = 0;
    for (int j = 0; j < d; ++j) {
      Rat s = v[static_cast<size_t>(j)] * Rat(den);
      w[static_cast<size_t>(j)] = Int(s.get_num());
      content = gcd(content, w[static_cast<size_t>(j)]);
    }
    if (sign(content) != 0)
      for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    for (const Int& x : w) {
      if (sign(x) == 0) continue;
      if (sign(x) < 0)
        for (auto& y : w) y = -y;
      break;
    }
    basis.push_back(std::move(w));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

RatMatrix::RatMatrix(const IntMatrix& m) : dim_(m.dim()), a_(static_cast<size_t>(m.dim()) * m.dim()) {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMatrix RatMatrix::identity(int dim) {
  RatMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  RatMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Rat& aik = at(i, k);
      if (sign(aik) == 0) continue;
      for (int j = 0; j < dim_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
  RatMatrix r(dim_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  std::vector<Rat> r(static_cast<size_t>(dim_), Rat(0));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return r;
}

Rat RatMatrix::det() const {
  RatMatrix m = *this;
  Rat d(1);
  for (int k = 0; k < dim_; ++k) {
    int p = -1;
    for (int i = k; i < dim_; ++i)
      if (sign(m.at(i, k)) != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != k) {
      for (int j = 0; j < dim_; ++j) std::swap(m.at(k, j), m.at(p, j));
      d = -d;
    }
    d *= m.at(k, k);
    Rat inv = 1 / m.at(k, k);
    for (int i = k + 1; i < dim_; ++i) {
      Rat f = m.at(i, k) * inv;
      if (sign(f) == 0) continue;
      for (int j = k; j < dim_; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return d;
}

Int RatMatrix::denominator_lcm() const {
  Int l = 1;
  for (const Rat& x : a_) l = lcm(l, Int(x.get_den()));
  return l;
}

RatMatrix inverse(const RatMatrix& a) {
  int d = a.dim();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(d);
  for (int k = 0; k < d; ++k) {
    int p = -1;
    for (int i = k; i < d; ++i)
      if (sign(m.at(i, k)) != 0) { p = i; break; }
    if (p < 0) throw DomainError(Err::NotInvertible, "rational matrix is singular");
    if (p != k)
      for (int j = 0; j < d; ++j) {
        std::swap(m.at(k, j), m.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rat f = 1 / m.at(k, k);
    for (int j = 0; j < d; ++j) {
      m.at(k, j) *= f;
      inv.at(k, j) *= f;
    }
    for (int i = 0; i < d; ++i) {
      if (i == k) continue;
      Rat g = m.at(i, k);
      if (sign(g) == 0) continue;
      for (int j = 0; j < d; ++j) {
        m.at(i, j) -= g * m.at(k, j);
        inv.at(i, j) -= g * inv.at(k, j);
      }
    }
  }
  return inv;
}

} // namespace toral
