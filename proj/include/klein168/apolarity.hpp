#pragma once

#include <vector>

#include "klein168/linalg.hpp"
#include "klein168/poly.hpp"

namespace klein {

// Symmetric 6x6 matrix of a ternary quartic over the degree-2 monomials in
// ascending grlex order. Entry (a, b) is the coefficient of F at the product
// monomial times the factorial of its exponent vector, so that a fourth power
// of a linear form yields a rank-one matrix. Degeneracy (determinant zero or
// not) does not depend on this normalization.
struct Catalecticant {
  std::vector<std::vector<int>> basis;
  CycMatrix matrix;
  CycNum determinant;
  long rank = 0;
};

Catalecticant catalecticant(const SparsePoly& f);
bool is_degenerate(const SparsePoly& f);

// The 15x6 linear system expressing F as a combination of the fourth powers
// of six lines: column j holds the coefficients of lines[j]^4 over the
// degree-4 monomials in ascending grlex order, and target holds those of F.
struct HexagonSystem {
  SparsePoly quartic;
  std::vector<SparsePoly> lines;
  std::vector<std::vector<int>> basis;
  CycMatrix matrix;
  std::vector<CycNum> target;
};

HexagonSystem hexagon_system(const SparsePoly& f, const std::vector<SparsePoly>& lines);

enum class SolveStatus { solved, inconsistent };

// Exact outcome of the power-sum solve. When solved, multipliers holds the
// six values with every free column pinned to zero, so the result is unique
// and reproducible; when the columns are independent there is nothing to pin.
// The two ranks certify the verdict either way: inconsistent means exactly
// rank_augmented = rank_system + 1.
struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<CycNum> multipliers;
  long rank_system = 0;
  long rank_augmented = 0;
};

// Requires the six lines to be nonzero and pairwise non-proportional;
// inconsistency of the system is a result, not an error.
SolveResult powersum_solve(const SparsePoly& f, const std::vector<SparsePoly>& lines);

// The three partial derivatives of a quartic as a 3x10 coefficient matrix
// over the degree-3 monomials in ascending grlex order. Rank 3 means the map
// sending a direction to the derivative of F along it is injective. The
// partials are checked against the Euler identity x1*F_1+x2*F_2+x3*F_3 = 4F.
struct ApolarEmbedding {
  std::vector<SparsePoly> partials;
  std::vector<std::vector<int>> basis;
  CycMatrix matrix;
  long rank = 0;
};

ApolarEmbedding apolar_embedding(const SparsePoly& f);

// Skew forms on the cubics attached to a nondegenerate quartic F: the inverse
// catalecticant, read as a symmetric tensor of quadric pairs, is multiplied
// into each basis bivector of the plane and antisymmetrized. ker_dimensions
// records the kernel dimension of each of the three forms.
struct SkewFormBundle {
  std::vector<CycMatrix> forms;
  std::vector<long> ker_dimensions;
};

SkewFormBundle spusk_forms(const SparsePoly& f);

// Checks that the span of the three partials of F lies in the kernel of every
// skew form of spusk_forms(f). Throws math_error when F is degenerate or when
// any of the forms vanishes identically.
bool verify_spusk(const SparsePoly& f);

}  // namespace klein
