#pragma once

#include <set>
#include <vector>

#include "klein168/groups.hpp"

namespace klein {

// Branch datum of a curve with a faithful action of the order-168 group:
// quotient genus, curve genus, and the counts a_k of orbits whose point
// stabilizer is cyclic of order k (orbit sizes 84, 56, 42, 24).
struct BranchDatum {
  long quotient_genus = 0;
  long genus = 0;
  long a2 = 0, a3 = 0, a4 = 0, a7 = 0;

  bool satisfies_identity() const {
    return 2 * genus - 2 == 168 * (2 * quotient_genus - 2) + 84 * a2 + 112 * a3 + 126 * a4 + 144 * a7;
  }
  bool operator==(const BranchDatum& o) const {
    return quotient_genus == o.quotient_genus && genus == o.genus && a2 == o.a2 && a3 == o.a3 &&
           a4 == o.a4 && a7 == o.a7;
  }
};

// All branch data with 2 <= genus <= g_max, by bounded brute force over the
// quotient genus and the four orbit counts. Quotient genera >= 1 are searched
// rather than assumed empty. bound_scale multiplies every internal search
// bound so completeness can be checked by rerunning with a larger scale.
// Output is sorted by genus, then lexicographically on (a2, a3, a4, a7).
std::vector<BranchDatum> rh_enumerate(long g_max, long bound_scale = 1);

// Possible orbit sizes on such a curve: 168/k over the cyclic subgroup
// orders k of the given order-168 group.
std::set<long> curve_orbit_sizes(const FiniteMatrixGroup& g);
std::set<long> curve_orbit_sizes();

// Castelnuovo's genus bound for a non-degenerate space curve of degree d:
// (d-2)^2/4 for even d, (d-1)(d-3)/4 for odd d. Requires d >= 3.
long castelnuovo(long d);

// Whether m = 24n1 + 42n2 + 56n3 + 84n4 + 168n5 with non-negative integers;
// the second form also returns one witness (n1, n2, n3, n4, n5).
bool representable_as_orbit_sum(long m);
bool representable_as_orbit_sum(long m, std::vector<long>& witness);

}  // namespace klein
