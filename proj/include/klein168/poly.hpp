#pragma once

#include <map>
#include <string>
#include <vector>

#include "klein168/linalg.hpp"

namespace klein {

// Graded lexicographic order on exponent vectors.
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Multivariate polynomial with exact cyclotomic coefficients.
// Terms are kept in graded lexicographic order with no zero coefficients.
class SparsePoly {
 public:
  using TermMap = std::map<std::vector<int>, CycNum, GrlexLess>;

  explicit SparsePoly(int nvars = 0) : nvars_(nvars) {}
  static SparsePoly constant(int nvars, const CycNum& c);
  static SparsePoly variable(int nvars, int i);
  static SparsePoly monomial(int nvars, std::vector<int> exps, const CycNum& c);
  // Text form: `2*x1^4 + 6*x1*x2*x3*x4 + cyc(7; z)*x2^3*x3 - x3`.
  static SparsePoly parse(int nvars, const std::string& text);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long degree() const;
  bool is_homogeneous() const;
  CycNum coeff(const std::vector<int>& exps) const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const CycNum& s) const;
  bool operator==(const SparsePoly& o) const;
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  SparsePoly pow(long k) const;
  SparsePoly derivative(int var) const;
  CycNum evaluate(const std::vector<CycNum>& point) const;

  std::string str() const;
  std::string key() const { return str(); }

  void add_term(std::vector<int> exps, const CycNum& c);

 private:
  int nvars_;
  TermMap terms_;
};

// Right action by linear substitution: act(M, f)(x) = f(x * M^{-1}),
// so that act(M*N, f) = act(N, act(M, f)).
SparsePoly act(const CycMatrix& m, const SparsePoly& f);

// Substitutes variable j by the linear form sum_i forms[j][i] * x_i.
SparsePoly substitute_linear(const SparsePoly& f, const std::vector<std::vector<CycNum>>& forms);

bool is_invariant(const SparsePoly& f, const std::vector<CycMatrix>& gens);

// Determinant of the matrix of second partials; f homogeneous in 3 variables.
SparsePoly hessian(const SparsePoly& f);

// All exponent vectors of total degree d, ascending grlex.
std::vector<std::vector<int>> monomials_of_degree(int nvars, int d);

}  // namespace klein
