#pragma once

#include <string>
#include <vector>

#include "klein168/groups.hpp"
#include "klein168/poly.hpp"

namespace klein {

// Named forms of the invariant-theory layer. The quaternary entries live in
// Q[x1..x4]; the ternary entries are the plane quartic in both classical
// models together with the sextic Hessian of the epsilon model.
struct InvariantCatalog {
  SparsePoly a, b, c, d, e;                   // quaternary building blocks
  SparsePoly phi4, phi6, phi8, phi8p, phi14;  // integer coefficients
  SparsePoly klein_v22;                       // x1*x2^3 + x2*x3^3 + x3*x1^3
  SparsePoly klein_eps;                       // x1^4+x2^4+x3^4 + 3e(...)
  SparsePoly hessian_sextic;                  // Hessian of klein_eps
};

// Generators of the order-336 matrix group on C^4: diag(1, z, z^4, z^2) and
// the symmetric circulant-like matrix scaled by 1/sqrt(-7).
std::vector<CycMatrix> space_generators();

// The four ternary generators A, B, C, D of the order-168 plane action, in
// the row-vector convention shared by act().
std::vector<CycMatrix> plane_generators();

// Generators of an order-21 group fixing klein_v22: diag(z^4, z, z^2) and the
// cyclic shift. klein_v22 is not fixed by plane_generators(); its stabilizer
// is a different conjugate of the same abstract group, and these two
// generators are enough to pin the transcription.
std::vector<CycMatrix> v22_stabilizer_generators();

// Builds every entry term by term from the classical formulas, then validates
// each one with is_invariant against the generators of its own symmetry
// group. Any failed check throws math_error: a failure here is a
// transcription error, never a recoverable condition.
InvariantCatalog build_klein_invariants();

// (1/|G|) sum_g act(g, f). Cosets of a maximal diagonal cyclic subgroup
// reduce the number of dense substitutions; per-coset partial sums may be
// computed in parallel and are reduced in a fixed order.
SparsePoly reynolds(const FiniteMatrixGroup& g, const SparsePoly& f);

// Literal element-by-element average, kept as the reference implementation.
SparsePoly reynolds_serial(const FiniteMatrixGroup& g, const SparsePoly& f);

// Dimension of the G-invariant subspace of degree-d forms, computed both by
// the Newton recurrence on the defining character and by the rank of the
// Reynolds projection on the degree-d monomial basis. Throws math_error when
// the two methods disagree.
long invariant_dim(const FiniteMatrixGroup& g, long d);

// Bundled catalog file names, in emission order (one "<name>.poly" each).
std::vector<std::string> catalog_entry_names();
const SparsePoly& catalog_entry(const InvariantCatalog& cat, const std::string& name);
SparsePoly& catalog_entry(InvariantCatalog& cat, const std::string& name);

// File format: '#' comment lines, a "vars N" line, then the polynomial in the
// SparsePoly text syntax (long polynomials may wrap across lines).
void write_poly_file(const std::string& path, const std::string& comment, const SparsePoly& f);
SparsePoly load_poly_file(const std::string& path);

// Writes/reads "<dir>/<name>.poly" for every catalog entry. load_catalog
// checks the expected degrees but not invariance; compare against
// build_klein_invariants() for a full audit.
void emit_catalog(const InvariantCatalog& cat, const std::string& dir);
InvariantCatalog load_catalog(const std::string& dir);

}  // namespace klein
