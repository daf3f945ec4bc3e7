#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "klein168/diophantine.hpp"
#include "klein168/invariants.hpp"

using namespace klein;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen([] {
    if (const char* s = std::getenv("KLEIN_TEST_SEED")) return std::mt19937::result_type(std::atoll(s));
    return std::mt19937::result_type(20230822);
  }());
  return gen;
}

long pick(long n) {
  std::uniform_int_distribution<long> d(0, n - 1);
  return d(rng());
}

// rows as (g, a2, a3, a4, a7), in output order
const std::vector<BranchDatum> kGenusTable = {
    {0, 3, 1, 1, 0, 1},  {0, 8, 0, 2, 1, 0},  {0, 10, 1, 0, 1, 1}, {0, 15, 0, 1, 2, 0},
    {0, 15, 3, 1, 0, 0}, {0, 17, 0, 2, 0, 1}, {0, 19, 1, 0, 0, 2}, {0, 22, 0, 0, 3, 0},
    {0, 22, 3, 0, 1, 0}, {0, 24, 0, 1, 1, 1}, {0, 29, 2, 2, 0, 0}};

}  // namespace

TEST_CASE("the genus table is reproduced row for row") {
  auto rows = rh_enumerate(30);
  REQUIRE(rows.size() == 11);
  for (size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(rows[i] == kGenusTable[i]);
    CHECK(rows[i].satisfies_identity());
    CHECK(rows[i].quotient_genus == 0);
  }

  std::multiset<long> genera;
  for (const auto& r : rows) genera.insert(r.genus);
  CHECK(genera == std::multiset<long>{3, 8, 10, 15, 15, 17, 19, 22, 22, 24, 29});

  CHECK(rh_enumerate(2).empty());
  CHECK(rh_enumerate(3).size() == 1);
  CHECK_THROWS_AS(rh_enumerate(1), math_error);
  CHECK_THROWS_AS(rh_enumerate(30, 0), math_error);
}

TEST_CASE("enumeration is stable under enlarged bounds") {
  auto base = rh_enumerate(30);
  auto doubled = rh_enumerate(30, 2);
  auto tripled = rh_enumerate(30, 3);
  REQUIRE(doubled.size() == base.size());
  REQUIRE(tripled.size() == base.size());
  for (size_t i = 0; i < base.size(); ++i) {
    CHECK(doubled[i] == base[i]);
    CHECK(tripled[i] == base[i]);
  }

  auto low = rh_enumerate(10);
  REQUIRE(low.size() == 3);
  for (size_t i = 0; i < low.size(); ++i) CHECK(low[i] == base[i]);

  auto high = rh_enumerate(60);
  CHECK(high.size() > base.size());
  for (size_t i = 0; i < high.size(); ++i) {
    CHECK(high[i].satisfies_identity());
    if (high[i].genus <= 30) CHECK(high[i] == base[i]);
    CHECK(high[i].genus >= 3);
  }
}

TEST_CASE("branch identities hold on randomized data") {
  for (int t = 0; t < 200; ++t) {
    BranchDatum b;
    b.quotient_genus = pick(3);
    b.a2 = pick(5);
    b.a3 = pick(5);
    b.a4 = pick(5);
    b.a7 = pick(5);
    long two_g = 168 * (2 * b.quotient_genus - 2) + 84 * b.a2 + 112 * b.a3 + 126 * b.a4 +
                 144 * b.a7 + 2;
    if (two_g % 2 != 0) continue;
    b.genus = two_g / 2;
    CHECK(b.satisfies_identity());
    b.genus += 1 + pick(3);
    CHECK_FALSE(b.satisfies_identity());
  }
}

TEST_CASE("curve orbit sizes come from the cyclic subgroup census") {
  std::set<long> expect{24, 42, 56, 84, 168};
  CHECK(curve_orbit_sizes() == expect);
  CHECK(curve_orbit_sizes().count(24) == 1);
  CHECK(curve_orbit_sizes().count(21) == 0);

  FiniteMatrixGroup plane = FiniteMatrixGroup::generate(plane_generators(), 200);
  CHECK(curve_orbit_sizes(plane) == expect);
  for (const auto& cls : plane.classes()) {
    long k = cls.element_order;
    CHECK((k == 1 || k == 2 || k == 3 || k == 4 || k == 7));
    CHECK(expect.count(168 / k) == 1);
  }

  FiniteMatrixGroup cover = FiniteMatrixGroup::generate(space_generators(), 400);
  CHECK(curve_orbit_sizes(cover.projectivize(200)) == expect);
  CHECK_THROWS_AS(curve_orbit_sizes(cover), math_error);
}

TEST_CASE("Castelnuovo bounds") {
  CHECK(castelnuovo(3) == 0);
  CHECK(castelnuovo(4) == 1);
  CHECK(castelnuovo(5) == 2);
  CHECK(castelnuovo(6) == 4);
  CHECK(castelnuovo(7) == 6);
  CHECK(castelnuovo(14) == 36);
  for (long d = 3; d < 80; ++d) CHECK(castelnuovo(d + 1) >= castelnuovo(d));
  CHECK_THROWS_AS(castelnuovo(2), math_error);
  CHECK_THROWS_AS(castelnuovo(0), math_error);
  CHECK_THROWS_AS(castelnuovo(-5), math_error);
}

TEST_CASE("orbit-sum representability") {
  CHECK_FALSE(representable_as_orbit_sum(60));

  // 90 = 24*2 + 42 and 120 = 24*5, so both are representable.
  std::vector<long> w;
  REQUIRE(representable_as_orbit_sum(90, w));
  CHECK(w == std::vector<long>{2, 1, 0, 0, 0});
  REQUIRE(representable_as_orbit_sum(120, w));
  CHECK(w == std::vector<long>{5, 0, 0, 0, 0});

  REQUIRE(representable_as_orbit_sum(24, w));
  CHECK(w == std::vector<long>{1, 0, 0, 0, 0});
  REQUIRE(representable_as_orbit_sum(168, w));
  CHECK(24 * w[0] + 42 * w[1] + 56 * w[2] + 84 * w[3] + 168 * w[4] == 168);
  REQUIRE(representable_as_orbit_sum(66, w));
  CHECK(w == std::vector<long>{1, 1, 0, 0, 0});
  CHECK(representable_as_orbit_sum(0));

  const long sizes[5] = {24, 42, 56, 84, 168};
  for (int t = 0; t < 200; ++t) {
    long m = pick(2000);
    std::vector<long> wit;
    bool rep = representable_as_orbit_sum(m, wit);
    if (rep) {
      long sum = 0;
      for (int k = 0; k < 5; ++k) {
        CHECK(wit[static_cast<size_t>(k)] >= 0);
        sum += sizes[k] * wit[static_cast<size_t>(k)];
      }
      CHECK(sum == m);
    }
    if (m <= 500) {
      bool brute = false;
      for (long n1 = 0; 24 * n1 <= m; ++n1)
        for (long n2 = 0; 24 * n1 + 42 * n2 <= m; ++n2)
          for (long n3 = 0; 24 * n1 + 42 * n2 + 56 * n3 <= m; ++n3)
            for (long n4 = 0; 24 * n1 + 42 * n2 + 56 * n3 + 84 * n4 <= m; ++n4) {
              long rest = m - 24 * n1 - 42 * n2 - 56 * n3 - 84 * n4;
              if (rest % 168 == 0) brute = true;
            }
      CHECK(rep == brute);
    }
  }
  CHECK_THROWS_AS(representable_as_orbit_sum(-1), math_error);
}
