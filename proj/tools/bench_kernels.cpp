// Times the parallel kernels against their serial references and verifies
// that both produce identical exact results.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "klein168/geometry.hpp"
#include "klein168/invariants.hpp"

using namespace klein;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled, serial build\n");
#endif

  FiniteMatrixGroup cover = FiniteMatrixGroup::generate(space_generators(), 400);
  int failures = 0;

  for (long d : {4L, 6L}) {
    std::vector<int> exps(4, 0);
    exps[0] = static_cast<int>(d - 2);
    exps[1] = 2;
    SparsePoly probe = SparsePoly::monomial(4, exps, CycNum(1));

    auto t0 = std::chrono::steady_clock::now();
    SparsePoly parallel = reynolds(cover, probe);
    double tp = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    SparsePoly serial = reynolds_serial(cover, probe);
    double ts = seconds_since(t0);

    bool same = parallel == serial;
    if (!same) ++failures;
    std::printf("reynolds degree %ld: parallel %.3f s, serial %.3f s, results %s\n", d, tp, ts,
                same ? "identical" : "DIFFER");
  }

  std::vector<ProjPoint> pts = load_point_file(data_file("orbits/sigma28.pts"));
  long rank0 = -1;
  for (int rep = 0; rep < 2; ++rep) {
    auto t0 = std::chrono::steady_clock::now();
    long rank = conditions_rank(pts, 4);
    double t = seconds_since(t0);
    if (rep == 0)
      rank0 = rank;
    else if (rank != rank0)
      ++failures;
    std::printf("conditions_rank(28 points, degree 4) run %d: rank %ld, %.3f s\n", rep + 1, rank,
                t);
  }

  auto t0 = std::chrono::steady_clock::now();
  long dim6 = invariant_dim(cover, 6);
  std::printf("invariant_dim(degree 6): %ld, %.3f s\n", dim6, seconds_since(t0));

  if (failures > 0) {
    std::printf("BENCH FAIL: %d kernel comparisons differ\n", failures);
    return 1;
  }
  std::printf("all kernel comparisons identical\n");
  return 0;
}
