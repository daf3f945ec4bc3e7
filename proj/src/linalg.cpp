#include "klein168/linalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace klein {

CycMatrix::CycMatrix(long rows, long cols) : rows_(rows), cols_(cols), n_(1) {
  if (rows < 0 || cols < 0) throw math_error("negative matrix shape");
  e_.assign(static_cast<size_t>(rows * cols), CycNum());
}

CycMatrix::CycMatrix(std::vector<std::vector<CycNum>> rows) {
  rows_ = static_cast<long>(rows.size());
  cols_ = rows_ ? static_cast<long>(rows[0].size()) : 0;
  n_ = 1;
  for (const auto& r : rows) {
    if (static_cast<long>(r.size()) != cols_) throw math_error("ragged matrix rows");
    for (const auto& v : r) n_ = lcm_long(n_, v.conductor());
  }
  e_.reserve(static_cast<size_t>(rows_ * cols_));
  for (auto& r : rows)
    for (auto& v : r) e_.push_back(v.conductor() == n_ ? std::move(v) : v.embed(n_));
}

CycMatrix CycMatrix::identity(long n) {
  CycMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.e_[static_cast<size_t>(i * n + i)] = CycNum(1);
  return m;
}

CycMatrix CycMatrix::diagonal(std::vector<CycNum> diag) {
  CycMatrix m(static_cast<long>(diag.size()), static_cast<long>(diag.size()));
  for (size_t i = 0; i < diag.size(); ++i) m.set(static_cast<long>(i), static_cast<long>(i), diag[i]);
  return m;
}

CycMatrix CycMatrix::parse_rows(const std::vector<std::string>& lines) {
  std::vector<std::vector<CycNum>> rows;
  for (const auto& line : lines) {
    std::vector<CycNum> row;
    std::string cell;
    int depth = 0;
    for (char ch : line) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ';' && depth == 0) {
        row.push_back(CycNum::parse(cell));
        cell.clear();
      } else {
        cell.push_back(ch);
      }
    }
    row.push_back(CycNum::parse(cell));
    rows.push_back(std::move(row));
  }
  return CycMatrix(std::move(rows));
}

const CycNum& CycMatrix::at(long i, long j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw math_error("matrix index out of range");
  return e_[static_cast<size_t>(i * cols_ + j)];
}

void CycMatrix::unify_(long m) {
  if (m == n_) return;
  long t = lcm_long(n_, m);
  if (t != n_) {
    for (auto& v : e_) v = v.embed(t);
    n_ = t;
  }
}

void CycMatrix::set(long i, long j, const CycNum& v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw math_error("matrix index out of range");
  unify_(v.conductor());
  e_[static_cast<size_t>(i * cols_ + j)] = v.conductor() == n_ ? v : v.embed(n_);
}

CycMatrix CycMatrix::embed(long m) const {
  CycMatrix r(*this);
  r.unify_(m);
  return r;
}

CycMatrix CycMatrix::minimized() const {
  std::vector<std::vector<CycNum>> rows(static_cast<size_t>(rows_));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) rows[static_cast<size_t>(i)].push_back(at(i, j).minimized());
  return CycMatrix(std::move(rows));
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix shape mismatch in +");
  long t = lcm_long(n_, o.n_);
  CycMatrix a = embed(t), b = o.embed(t), r(rows_, cols_);
  r.unify_(t);
  for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
  return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix shape mismatch in -");
  long t = lcm_long(n_, o.n_);
  CycMatrix a = embed(t), b = o.embed(t), r(rows_, cols_);
  r.unify_(t);
  for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
  return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_) throw math_error("matrix shape mismatch in *");
  long t = lcm_long(n_, o.n_);
  CycMatrix a = embed(t), b = o.embed(t), r(rows_, o.cols_);
  r.unify_(t);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const CycNum& aik = a.e_[static_cast<size_t>(i * cols_ + k)];
      if (aik.is_zero()) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const CycNum& bkj = b.e_[static_cast<size_t>(k * o.cols_ + j)];
        if (bkj.is_zero()) continue;
        r.e_[static_cast<size_t>(i * o.cols_ + j)] += aik * bkj;
      }
    }
  return r;
}

CycMatrix CycMatrix::operator*(const CycNum& s) const {
  CycMatrix r = embed(lcm_long(n_, s.conductor()));
  CycNum sc = s.embed(r.n_);
  for (auto& v : r.e_) v *= sc;
  return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != o.at(i, j)) return false;
  return true;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix r(cols_, rows_);
  r.unify_(n_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.e_[static_cast<size_t>(j * rows_ + i)] = at(i, j);
  return r;
}

CycNum CycMatrix::trace() const {
  if (rows_ != cols_) throw math_error("trace of non-square matrix");
  CycNum t;
  for (long i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

CycNum CycMatrix::det_cofactor_() const {
  long n = rows_;
  if (n == 0) return CycNum(1);
  if (n == 1) return at(0, 0);
  CycNum acc;
  std::vector<long> cols;
  for (long j = 0; j < n; ++j) cols.push_back(j);
  // Expansion along row 0 of the submatrix selected by `cols`, recursively.
  std::function<CycNum(long, std::vector<long>&)> go = [&](long row, std::vector<long>& cs) -> CycNum {
    if (cs.size() == 1) return at(row, cs[0]);
    CycNum sum;
    for (size_t k = 0; k < cs.size(); ++k) {
      const CycNum& pivot = at(row, cs[k]);
      if (pivot.is_zero()) continue;
      long col = cs[k];
      cs.erase(cs.begin() + static_cast<long>(k));
      CycNum sub = go(row + 1, cs);
      cs.insert(cs.begin() + static_cast<long>(k), col);
      if (!sub.is_zero()) {
        CycNum term = pivot * sub;
        if (k % 2) sum -= term; else sum += term;
      }
    }
    return sum;
  };
  return go(0, cols);
}

CycNum CycMatrix::det_bareiss_() const {
  long n = rows_;
  std::vector<CycNum> a = e_;
  auto idx = [n](long i, long j) { return static_cast<size_t>(i * n + j); };
  CycNum prev(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (a[idx(k, k)].is_zero()) {
      long p = -1;
      for (long i = k + 1; i < n; ++i)
        if (!a[idx(i, k)].is_zero()) { p = i; break; }
      if (p < 0) return CycNum(0);
      for (long j = 0; j < n; ++j) std::swap(a[idx(k, j)], a[idx(p, j)]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        CycNum num = a[idx(k, k)] * a[idx(i, j)] - a[idx(i, k)] * a[idx(k, j)];
        a[idx(i, j)] = num / prev;
      }
    prev = a[idx(k, k)];
  }
  CycNum d = a[idx(n - 1, n - 1)];
  return sign < 0 ? -d : d;
}

CycNum CycMatrix::det() const {
  if (rows_ != cols_) throw math_error("determinant of non-square matrix");
  if (rows_ <= 4) return det_cofactor_();
  return det_bareiss_();
}

CycMatrix CycMatrix::inverse() const {
  if (rows_ != cols_) throw math_error("inverse of non-square matrix");
  long n = rows_;
  std::vector<std::vector<CycNum>> w(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    auto& row = w[static_cast<size_t>(i)];
    row.assign(static_cast<size_t>(2 * n), CycNum().embed(n_));
    for (long j = 0; j < n; ++j) row[static_cast<size_t>(j)] = at(i, j);
    row[static_cast<size_t>(n + i)] = CycNum(1).embed(n_);
  }
  auto pivots = rref_rows(w);
  if (static_cast<long>(pivots.size()) != n || pivots.back() >= n)
    throw math_error("matrix is singular");
  std::vector<std::vector<CycNum>> inv(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    inv[static_cast<size_t>(i)].assign(w[static_cast<size_t>(i)].begin() + n, w[static_cast<size_t>(i)].end());
  return CycMatrix(std::move(inv));
}

CycMatrix CycMatrix::pow(long k) const {
  if (rows_ != cols_) throw math_error("power of non-square matrix");
  if (k < 0) return inverse().pow(-k);
  CycMatrix r = identity(rows_).embed(n_), base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

long CycMatrix::multiplicative_order(long cap) const {
  if (rows_ != cols_) throw math_error("order of non-square matrix");
  CycMatrix p = *this;
  for (long m = 1; m <= cap; ++m) {
    if (p.is_identity()) return m;
    p = p * *this;
  }
  throw math_error("multiplicative order exceeds cap");
}

bool CycMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      const CycNum& v = at(i, j);
      if (i == j ? !(v == CycNum(1)) : !v.is_zero()) return false;
    }
  return true;
}

bool CycMatrix::is_scalar() const {
  if (rows_ != cols_ || rows_ == 0) return false;
  const CycNum& d = at(0, 0);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      const CycNum& v = at(i, j);
      if (i == j ? !(v == d) : !v.is_zero()) return false;
    }
  return true;
}

long CycMatrix::rank() const {
  std::vector<std::vector<CycNum>> rows(static_cast<size_t>(rows_));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) rows[static_cast<size_t>(i)].push_back(at(i, j));
  return static_cast<long>(rref_rows(rows).size());
}

Subspace CycMatrix::kernel() const {
  std::vector<std::vector<CycNum>> rows(static_cast<size_t>(rows_));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) rows[static_cast<size_t>(i)].push_back(at(i, j));
  auto pivots = rref_rows(rows);
  std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
  for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<CycNum>> basis;
  for (long f = 0; f < cols_; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::vector<CycNum> v(static_cast<size_t>(cols_), CycNum().embed(n_));
    v[static_cast<size_t>(f)] = CycNum(1).embed(n_);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -rows[r][static_cast<size_t>(f)];
    basis.push_back(std::move(v));
  }
  return Subspace::from_vectors(cols_, std::move(basis));
}

Subspace CycMatrix::eigenspace(const CycNum& lam) const {
  if (rows_ != cols_) throw math_error("eigenspace of non-square matrix");
  CycMatrix shifted = *this - identity(rows_) * lam;
  return shifted.kernel();
}

std::vector<std::string> CycMatrix::row_strings() const {
  std::vector<std::string> out;
  for (long i = 0; i < rows_; ++i) {
    std::string line;
    for (long j = 0; j < cols_; ++j) {
      if (j) line += "; ";
      line += at(i, j).str();
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::string CycMatrix::str() const {
  std::string out;
  for (const auto& line : row_strings()) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string CycMatrix::key() const {
  std::string out = std::to_string(rows_) + "x" + std::to_string(cols_) + "@";
  for (const auto& v : e_) {
    out += v.key();
    out += '|';
  }
  return out;
}

std::vector<long> rref_rows(std::vector<std::vector<CycNum>>& rows) {
  std::vector<long> pivots;
  if (rows.empty()) return pivots;
  long ncols = static_cast<long>(rows[0].size());
  long r = 0;
  for (long c = 0; c < ncols && r < static_cast<long>(rows.size()); ++c) {
    long p = -1;
    for (long i = r; i < static_cast<long>(rows.size()); ++i)
      if (!rows[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(rows[static_cast<size_t>(p)], rows[static_cast<size_t>(r)]);
    CycNum inv = rows[static_cast<size_t>(r)][static_cast<size_t>(c)].inverse();
    for (long j = c; j < ncols; ++j) rows[static_cast<size_t>(r)][static_cast<size_t>(j)] *= inv;
    for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
      if (i == r) continue;
      CycNum f = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f.is_zero()) continue;
      for (long j = c; j < ncols; ++j)
        rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

Subspace Subspace::from_vectors(long ambient, std::vector<std::vector<CycNum>> vecs) {
  long t = 1;
  for (const auto& v : vecs) {
    if (static_cast<long>(v.size()) != ambient) throw math_error("vector length != ambient dimension");
    for (const auto& x : v) t = lcm_long(t, x.conductor());
  }
  for (auto& v : vecs)
    for (auto& x : v)
      if (x.conductor() != t) x = x.embed(t);
  rref_rows(vecs);
  Subspace s(ambient);
  s.basis_ = std::move(vecs);
  return s;
}

bool Subspace::contains(std::vector<CycNum> v) const {
  if (static_cast<long>(v.size()) != ambient_) throw math_error("vector length != ambient dimension");
  for (const auto& row : basis_) {
    long p = -1;
    for (long j = 0; j < ambient_; ++j)
      if (!row[static_cast<size_t>(j)].is_zero()) { p = j; break; }
    if (p < 0) continue;
    CycNum f = v[static_cast<size_t>(p)];
    if (f.is_zero()) continue;
    for (long j = 0; j < ambient_; ++j) v[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
  }
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw math_error("subspace ambient mismatch");
  // x in U iff x is annihilated by a basis of the kernel of U's basis matrix
  // (double orthogonal complement under the standard bilinear form).
  auto constraints = [this](const Subspace& s) {
    CycMatrix m(static_cast<long>(s.basis_.size()), ambient_);
    for (size_t i = 0; i < s.basis_.size(); ++i)
      for (long j = 0; j < ambient_; ++j) m.set(static_cast<long>(i), j, s.basis_[i][static_cast<size_t>(j)]);
    return m.kernel().basis();
  };
  std::vector<std::vector<CycNum>> stacked = constraints(*this);
  for (auto& row : constraints(o)) stacked.push_back(std::move(row));
  if (stacked.empty()) return *this;
  CycMatrix k(static_cast<long>(stacked.size()), ambient_);
  for (size_t i = 0; i < stacked.size(); ++i)
    for (long j = 0; j < ambient_; ++j) k.set(static_cast<long>(i), j, stacked[i][static_cast<size_t>(j)]);
  return k.kernel();
}

bool Subspace::operator==(const Subspace& o) const {
  if (ambient_ != o.ambient_ || basis_.size() != o.basis_.size()) return false;
  for (size_t i = 0; i < basis_.size(); ++i)
    for (size_t j = 0; j < basis_[i].size(); ++j)
      if (basis_[i][j] != o.basis_[i][j]) return false;
  return true;
}

std::string Subspace::key() const {
  std::string out = std::to_string(ambient_) + "#";
  for (const auto& row : basis_) {
    for (const auto& v : row) {
      out += v.minimized().str();
      out += '|';
    }
    out += '/';
  }
  return out;
}

std::vector<CycNum> root_of_unity_candidates(long m) {
  std::vector<CycNum> out;
  CycNum z = CycNum::zeta(m), p = CycNum(1).embed(m);
  for (long k = 0; k < m; ++k) {
    out.push_back(p);
    p *= z;
  }
  return out;
}

}  // namespace klein
