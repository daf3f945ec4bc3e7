#pragma once

#include <string>
#include <vector>

#include "klein168/groups.hpp"

namespace klein {

// Point of a projective space, stored with the first nonzero coordinate
// scaled to 1 so that coordinate-wise equality is projective equality.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<CycNum> coords);

  long ambient_vars() const { return static_cast<long>(coords_.size()); }
  long projective_dim() const { return static_cast<long>(coords_.size()) - 1; }
  const std::vector<CycNum>& coords() const { return coords_; }

  bool operator==(const ProjPoint& o) const;
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }

  // Canonical string key; equal points have equal keys, and the key is a
  // total order used to sort orbits deterministically.
  const std::string& key() const { return key_; }
  std::string str() const;
  static ProjPoint parse(const std::string& line);

 private:
  std::vector<CycNum> coords_;
  std::string key_;
};

// Right action on row vectors: p -> p * m.
ProjPoint point_act(const CycMatrix& m, const ProjPoint& p);

struct OrbitRecord {
  std::string label;
  std::vector<ProjPoint> points;  // sorted by key
  long stabilizer_order = 0;
  std::string stabilizer_label;
  long size() const { return static_cast<long>(points.size()); }
};

// Full orbit of p under every element of g, with the stabilizer read off by
// direct membership tests; |orbit| * |stabilizer| = |g| is checked exactly.
OrbitRecord orbit(const FiniteMatrixGroup& g, const ProjPoint& p);

struct FixedLocus {
  std::vector<ProjPoint> isolated;  // one-dimensional eigenspaces
  std::vector<Subspace> components; // fixed subspaces of vector dimension >= 2
};

// Fixed points in projective space of a single finite-order linear matrix:
// the union of its eigenspaces, with eigenvalue candidates drawn from the
// roots of unity of order dividing the matrix order.
FixedLocus fixed_points(const CycMatrix& m);

// Common fixed locus of a list of finite-order matrices (a point is fixed by
// the generated group iff it is a simultaneous eigenvector of the generators).
FixedLocus common_fixed_points(const std::vector<CycMatrix>& gens);

// Common fixed locus of a subgroup of a linear matrix group.
FixedLocus fixed_points(const FiniteMatrixGroup& parent, const SubgroupHandle& h);

// The finitely many special orbits on P^3: every orbit of size <= 41 under
// the projective action. Takes the order-336 linear cover (for eigenvector
// arithmetic) together with its order-168 projectivization (for orbits and
// stabilizer labels). Returns records labeled Sigma8, Sigma24, Sigma28,
// Sigma28p in that order; the two 28-orbits are distinguished by their
// lexicographically least point. Throws math_error if the census does not
// close up into exactly these four orbits.
std::vector<OrbitRecord> special_orbits_p3(const FiniteMatrixGroup& cover,
                                           const FiniteMatrixGroup& psl);

// Smallest orbit in P^2 under the order-168 linear plane group, located by
// sweeping the isolated fixed points of all prime-order class representatives.
OrbitRecord min_orbit_p2(const FiniteMatrixGroup& plane);
long min_orbit_size_p2(const FiniteMatrixGroup& plane);

// Rank of the evaluation matrix of all degree-d monomials at the given
// pairwise-distinct points: the number of independent linear conditions the
// points impose on degree-d forms.
long conditions_rank(const std::vector<ProjPoint>& points, long d);

// Point files: '#' comments, then one point per line as comma-separated
// CycNum literals.
std::vector<ProjPoint> load_point_file(const std::string& path);
void write_point_file(const std::string& path, const std::string& comment,
                      const std::vector<ProjPoint>& points);

}  // namespace klein
