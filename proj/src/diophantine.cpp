#include "klein168/diophantine.hpp"

#include <algorithm>

#include "klein168/invariants.hpp"

namespace klein {

std::vector<BranchDatum> rh_enumerate(long g_max, long bound_scale) {
  if (g_max < 2) throw math_error("branch enumeration needs g_max >= 2");
  if (bound_scale < 1) throw math_error("bound scale must be positive");
  long room = 2 * g_max - 2 + 336;
  long bq = bound_scale * (room / 336 + 1);
  long b2 = bound_scale * (room / 84 + 1);
  long b3 = bound_scale * (room / 112 + 1);
  long b4 = bound_scale * (room / 126 + 1);
  long b7 = bound_scale * (room / 144 + 1);

  std::vector<BranchDatum> out;
  for (long qg = 0; qg <= bq; ++qg)
    for (long a2 = 0; a2 <= b2; ++a2)
      for (long a3 = 0; a3 <= b3; ++a3)
        for (long a4 = 0; a4 <= b4; ++a4)
          for (long a7 = 0; a7 <= b7; ++a7) {
            long two_g = 168 * (2 * qg - 2) + 84 * a2 + 112 * a3 + 126 * a4 + 144 * a7 + 2;
            if (two_g % 2 != 0) continue;
            long g = two_g / 2;
            if (g < 2 || g > g_max) continue;
            out.push_back({qg, g, a2, a3, a4, a7});
          }
  std::sort(out.begin(), out.end(), [](const BranchDatum& x, const BranchDatum& y) {
    auto tx = std::tie(x.genus, x.a2, x.a3, x.a4, x.a7, x.quotient_genus);
    auto ty = std::tie(y.genus, y.a2, y.a3, y.a4, y.a7, y.quotient_genus);
    return tx < ty;
  });
  return out;
}

std::set<long> curve_orbit_sizes(const FiniteMatrixGroup& g) {
  if (g.order() != 168) throw math_error("curve orbit sizes need an order-168 group");
  std::set<long> out;
  for (long k : cyclic_orbit_sizes(g)) out.insert(k);
  return out;
}

std::set<long> curve_orbit_sizes() {
  static const std::set<long> sizes = [] {
    FiniteMatrixGroup plane = FiniteMatrixGroup::generate(plane_generators(), 200);
    return curve_orbit_sizes(plane);
  }();
  return sizes;
}

long castelnuovo(long d) {
  if (d < 3) throw math_error("Castelnuovo bound needs degree >= 3");
  if (d % 2 == 0) return (d - 2) * (d - 2) / 4;
  return (d - 1) * (d - 3) / 4;
}

bool representable_as_orbit_sum(long m, std::vector<long>& witness) {
  if (m < 0) throw math_error("orbit sums are non-negative");
  static const long sizes[5] = {24, 42, 56, 84, 168};
  std::vector<int> used(static_cast<size_t>(m) + 1, -1);
  std::vector<bool> ok(static_cast<size_t>(m) + 1, false);
  ok[0] = true;
  for (int k = 0; k < 5; ++k)
    for (long v = sizes[k]; v <= m; ++v)
      if (!ok[static_cast<size_t>(v)] && ok[static_cast<size_t>(v - sizes[k])]) {
        ok[static_cast<size_t>(v)] = true;
        used[static_cast<size_t>(v)] = k;
      }
  if (!ok[static_cast<size_t>(m)]) return false;
  witness.assign(5, 0);
  for (long v = m; v > 0; v -= sizes[used[static_cast<size_t>(v)]])
    ++witness[static_cast<size_t>(used[static_cast<size_t>(v)])];
  return true;
}

bool representable_as_orbit_sum(long m) {
  std::vector<long> witness;
  return representable_as_orbit_sum(m, witness);
}

}  // namespace klein
