#pragma once

#include <string>
#include <vector>

#include "klein168/cyclotomic.hpp"

namespace klein {

class Subspace;

// Dense matrix over a cyclotomic field. All entries share one conductor.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(long rows, long cols);
  explicit CycMatrix(std::vector<std::vector<CycNum>> rows);

  static CycMatrix identity(long n);
  static CycMatrix diagonal(std::vector<CycNum> diag);
  // One line per row, entries separated by ';'.
  static CycMatrix parse_rows(const std::vector<std::string>& lines);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long conductor() const { return n_; }

  const CycNum& at(long i, long j) const;
  void set(long i, long j, const CycNum& v);

  CycMatrix embed(long m) const;
  CycMatrix minimized() const;

  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator*(const CycNum& s) const;
  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  CycMatrix transpose() const;
  CycNum trace() const;
  CycNum det() const;
  CycMatrix inverse() const;
  CycMatrix pow(long k) const;
  // Smallest m >= 1 with A^m = I; throws math_error beyond cap.
  long multiplicative_order(long cap = 4096) const;

  long rank() const;
  Subspace kernel() const;
  Subspace eigenspace(const CycNum& lam) const;
  bool is_identity() const;
  bool is_scalar() const;

  // One string per row; key() is a hash key valid at fixed conductor.
  std::vector<std::string> row_strings() const;
  std::string str() const;
  std::string key() const;

 private:
  void unify_(long m);
  CycNum det_cofactor_() const;
  CycNum det_bareiss_() const;

  long rows_ = 0, cols_ = 0;
  long n_ = 1;
  std::vector<CycNum> e_;
};

// Linear subspace in canonical reduced row-echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(long ambient) : ambient_(ambient) {}
  static Subspace from_vectors(long ambient, std::vector<std::vector<CycNum>> vecs);

  long dim() const { return static_cast<long>(basis_.size()); }
  long ambient() const { return ambient_; }
  const std::vector<std::vector<CycNum>>& basis() const { return basis_; }

  bool contains(std::vector<CycNum> v) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  std::string key() const;

 private:
  long ambient_ = 0;
  std::vector<std::vector<CycNum>> basis_;
};

// Reduces rows in place to reduced row echelon form; returns pivot columns.
std::vector<long> rref_rows(std::vector<std::vector<CycNum>>& rows);

inline CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b) { return a * b; }
inline CycNum det(const CycMatrix& a) { return a.det(); }
inline CycMatrix inverse(const CycMatrix& a) { return a.inverse(); }
inline Subspace kernel(const CycMatrix& a) { return a.kernel(); }
inline long rank(const CycMatrix& a) { return a.rank(); }
inline Subspace eigenspace(const CycMatrix& m, const CycNum& lam) { return m.eigenspace(lam); }

// zeta_m^k for k = 0..m-1.
std::vector<CycNum> root_of_unity_candidates(long m);

}  // namespace klein
