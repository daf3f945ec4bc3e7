#pragma once

#include <string>
#include <vector>

#include "klein168/poly.hpp"

namespace klein {

// Graded reverse lexicographic order: higher total degree first; ties broken
// by the rightmost differing exponent, smaller entry winning.
bool grevlex_less(const std::vector<int>& a, const std::vector<int>& b);

// Polynomial over F_p, terms in descending grevlex with coefficients in
// [1, p-1].
struct PrimeFieldPoly {
  long p = 0;
  int nvars = 0;
  std::vector<std::pair<std::vector<int>, long>> terms;

  bool is_zero() const { return terms.empty(); }
  long degree() const;
  const std::vector<int>& leading_exponent() const;
  long leading_coefficient() const;
  std::string str() const;
  bool operator==(const PrimeFieldPoly& o) const {
    return p == o.p && nvars == o.nvars && terms == o.terms;
  }
};

// Modular image of an exact polynomial. Cyclotomic coefficients need
// p = 1 (mod conductor) and zeta_image of multiplicative order exactly the
// conductor mod p; the two-argument form picks a canonical image. Throws
// math_error if p divides a denominator or kills the leading form.
PrimeFieldPoly reduce_mod_p(const SparsePoly& f, long p, long zeta_image);
PrimeFieldPoly reduce_mod_p(const SparsePoly& f, long p);

// Canonical residue of multiplicative order exactly n mod the prime p
// (smallest primitive root raised to (p-1)/n).
long default_zeta_image(long p, long n);

struct GroebnerBasis {
  long p = 0;
  int nvars = 0;
  std::vector<PrimeFieldPoly> polys;  // reduced, monic, ascending leading terms

  std::vector<std::vector<int>> leading_terms() const;
};

// Buchberger's algorithm with the product and chain criteria and a
// deterministic pair queue ordered by (lcm degree, pair index); returns the
// reduced basis, which is unique for the ideal and the grevlex order.
GroebnerBasis buchberger(const std::vector<PrimeFieldPoly>& gens);

// Fully reduces f modulo the basis polynomials.
PrimeFieldPoly normal_form(const PrimeFieldPoly& f, const std::vector<PrimeFieldPoly>& basis);

// Krull dimension of the affine quotient ring, computed as the largest
// cardinality of a variable subset meeting no leading term's support.
// Returns -1 for the unit ideal.
long affine_staircase_dimension(const GroebnerBasis& gb);

// Projective dimension of the common zero set of homogeneous generators:
// affine cone dimension minus one, computed modulo every supplied prime and
// required to agree across them.
long projective_dimension(const std::vector<SparsePoly>& gens, const std::vector<long>& primes);

// Smoothness certificate for the projective hypersurface f = 0: true iff the
// ideal of f and its partials has a zero-dimensional affine cone modulo every
// supplied prime (good-prime smoothness certifies characteristic zero).
bool is_smooth_hypersurface(const SparsePoly& f, const std::vector<long>& primes);

const std::vector<long>& default_primes();

}  // namespace klein
