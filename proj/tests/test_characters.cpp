#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "klein168/characters.hpp"

using namespace klein;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen([] {
    if (const char* s = std::getenv("KLEIN_TEST_SEED")) return std::mt19937::result_type(std::atoll(s));
    return std::mt19937::result_type(20230819);
  }());
  return gen;
}

long pick(long n) {
  std::uniform_int_distribution<long> d(0, n - 1);
  return d(rng());
}

CycNum C(long v) { return CycNum(v); }

CycMatrix mat_A3() {
  return CycMatrix({{C(-1), C(0), C(0)}, {C(0), C(0), C(-1)}, {C(0), C(-1), C(0)}});
}

CycMatrix mat_B3() {
  return CycMatrix({{C(0), C(0), C(1)}, {C(1), C(0), C(0)}, {C(0), C(1), C(0)}});
}

CycMatrix mat_C3() {
  return CycMatrix({{C(0), C(1), C(0)}, {C(1), C(0), C(0)}, {C(0), C(0), C(-1)}});
}

CycMatrix mat_D3() {
  CycNum e = epsilon7(), eb = e.conj(), h = CycNum(make_rational(1, 2));
  return CycMatrix({{-h, h * e, -h}, {h, h * e, h}, {h * eb, CycNum(0), -h * eb}});
}

CycMatrix diag_gen4() {
  CycNum z = CycNum::zeta(7);
  return CycMatrix::diagonal({C(1), z, z.galois(4), z.galois(2)});
}

CycMatrix s_gen4() {
  CycNum z = CycNum::zeta(7);
  auto c = [&](int a, int b) { return z.galois(a) + z.galois(b); };
  CycMatrix m({{C(1), C(2), C(2), C(2)},
               {C(1), c(1, 6), c(2, 5), c(3, 4)},
               {C(1), c(2, 5), c(3, 4), c(1, 6)},
               {C(1), c(3, 4), c(1, 6), c(2, 5)}});
  return m * sqrt_minus_seven().inverse();
}

const FiniteMatrixGroup& cover_group() {
  static FiniteMatrixGroup g = FiniteMatrixGroup::generate({diag_gen4(), s_gen4()}, 400);
  return g;
}

const FiniteMatrixGroup& psl_p3() {
  static FiniteMatrixGroup g = cover_group().projectivize(200);
  return g;
}

const FiniteMatrixGroup& psl_p2() {
  static FiniteMatrixGroup g = FiniteMatrixGroup::generate({mat_A3(), mat_B3(), mat_C3(), mat_D3()}, 200);
  return g;
}

const CharacterTable& psl_table() {
  static CharacterTable t = build_psl_table(psl_p2());
  return t;
}

const CharacterTable& cover_table() {
  static CharacterTable t = build_cover_table(cover_group(), psl_table());
  return t;
}

const std::vector<long>& cover_to_psl() {
  static std::vector<long> p = projection_map(cover_group(), psl_p3());
  return p;
}

SubgroupHandle cover_preimage_of_order(long m, size_t which = 0) {
  SubgroupSearch s = subgroups_of_order(psl_p3(), m);
  REQUIRE(s.representatives.size() > which);
  return preimage_in_cover(cover_group(), psl_p3(), cover_to_psl(), s.representatives[which]).full;
}

ClassFunction zero_cf(const FiniteMatrixGroup& g) {
  ClassFunction f;
  f.group = &g;
  f.values.assign(static_cast<size_t>(g.class_count()), CycNum(0));
  return f;
}

ClassFunction combine(const CharacterTable& t, const std::vector<long>& mult) {
  ClassFunction acc = zero_cf(*t.group);
  for (size_t i = 0; i < mult.size(); ++i)
    for (long k = 0; k < mult[i]; ++k) acc = cf_add(acc, t.rows[i]);
  return acc;
}

std::vector<size_t> support(const RestrictionSummary& s) {
  std::vector<size_t> out;
  for (size_t i = 0; i < s.multiplicities.size(); ++i)
    if (s.multiplicities[i] != 0) out.push_back(i);
  return out;
}

std::multiset<long> support_dims(const RestrictionSummary& s) {
  std::multiset<long> out;
  for (size_t i = 0; i < s.multiplicities.size(); ++i)
    for (long k = 0; k < s.multiplicities[i]; ++k) out.insert(s.dims[i]);
  return out;
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("order-168 table matches the printed six-row table") {
  const CharacterTable& t = psl_table();
  const FiniteMatrixGroup& g = *t.group;
  CHECK(t.complete);
  CHECK(t.labels == std::vector<std::string>{"I", "W3", "W3v", "W6", "W7", "W8"});

  std::vector<long> sizes;
  for (long c : t.column_order) sizes.push_back(g.classes()[static_cast<size_t>(c)].size);
  CHECK(sizes == std::vector<long>{1, 21, 56, 42, 24, 24});

  std::vector<long> orders;
  for (long c : t.column_order) orders.push_back(g.classes()[static_cast<size_t>(c)].element_order);
  CHECK(orders == std::vector<long>{1, 2, 3, 4, 7, 7});

  CycNum e = epsilon7(), eb = e.conj();
  std::vector<std::vector<CycNum>> want = {
      {C(1), C(1), C(1), C(1), C(1), C(1)},
      {C(3), C(-1), C(0), C(1), e, eb},
      {C(3), C(-1), C(0), C(1), eb, e},
      {C(6), C(2), C(0), C(0), C(-1), C(-1)},
      {C(7), C(-1), C(1), C(-1), C(0), C(0)},
      {C(8), C(0), C(-1), C(0), C(1), C(1)}};
  auto grid = t.grid();
  REQUIRE(grid.size() == 6);
  for (size_t r = 0; r < 6; ++r) {
    REQUIRE(grid[r].size() == 6);
    for (size_t c = 0; c < 6; ++c) CHECK(grid[r][c] == want[r][c]);
  }

  std::multiset<long> dims;
  long dimsq = 0;
  for (const auto& row : t.rows) {
    auto d = row.dimension().to_rational().get_num().get_si();
    dims.insert(d);
    dimsq += d * d;
  }
  CHECK(dims == std::multiset<long>{1, 3, 3, 6, 7, 8});
  CHECK(dimsq == 168);
}

TEST_CASE("order-168 table satisfies both orthogonality relations") {
  const CharacterTable& t = psl_table();
  const FiniteMatrixGroup& g = *t.group;
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = 0; j < t.rows.size(); ++j)
      CHECK(inner(t.rows[i], t.rows[j]) == C(i == j ? 1 : 0));
  for (long c = 0; c < g.class_count(); ++c)
    for (long d = 0; d < g.class_count(); ++d) {
      CycNum s(0);
      for (const auto& row : t.rows) {
        auto [x, y] = CycNum::aligned(s, row.at_class(c) * row.at_class(d).conj());
        s = x + y;
      }
      CycNum want = c == d ? CycNum(make_rational(168, g.classes()[static_cast<size_t>(c)].size)) : C(0);
      CHECK(s == want);
    }
}

TEST_CASE("table construction rejects unsuitable input") {
  CHECK_THROWS_AS(build_psl_table(cover_group()), math_error);
  CHECK_THROWS_AS(build_psl_table(psl_p2(), trivial_character(psl_p2())), math_error);
  CHECK_THROWS_AS(character_of(psl_p3()), math_error);
  CHECK_THROWS_AS(build_cover_table(cover_group(), CharacterTable{}), math_error);
}

TEST_CASE("cover table carries the printed degree-4 and degree-8 rows") {
  const CharacterTable& t = cover_table();
  const FiniteMatrixGroup& g = *t.group;
  CHECK(!t.complete);
  CHECK(t.labels == std::vector<std::string>{"I", "W3", "W3v", "W6", "W7", "W8", "U4", "U8"});

  std::vector<long> sizes, orders;
  for (long c : t.column_order) {
    sizes.push_back(g.classes()[static_cast<size_t>(c)].size);
    orders.push_back(g.classes()[static_cast<size_t>(c)].element_order);
  }
  CHECK(sizes == std::vector<long>{1, 1, 56, 56, 24, 24, 24, 24, 42, 42, 42});
  CHECK(orders == std::vector<long>{1, 2, 3, 6, 7, 7, 14, 14, 4, 8, 8});

  CycNum e = epsilon7(), eb = e.conj();
  CycNum al = C(1) + e, alb = al.conj();
  std::vector<std::vector<CycNum>> want = {
      {C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1)},
      {C(3), C(3), C(0), C(0), e, eb, eb, e, C(-1), C(1), C(1)},
      {C(3), C(3), C(0), C(0), eb, e, e, eb, C(-1), C(1), C(1)},
      {C(6), C(6), C(0), C(0), C(-1), C(-1), C(-1), C(-1), C(2), C(0), C(0)},
      {C(7), C(7), C(1), C(1), C(0), C(0), C(0), C(0), C(-1), C(-1), C(-1)},
      {C(8), C(8), C(-1), C(-1), C(1), C(1), C(1), C(1), C(0), C(0), C(0)},
      {C(4), C(-4), C(1), C(-1), alb, al, -al, -alb, C(0), C(0), C(0)},
      {C(8), C(-8), C(-1), C(1), C(1), C(1), C(-1), C(-1), C(0), C(0), C(0)}};
  auto grid = t.grid();
  REQUIRE(grid.size() == 8);
  for (size_t r = 0; r < 8; ++r) {
    REQUIRE(grid[r].size() == 11);
    for (size_t c = 0; c < 11; ++c) CHECK(grid[r][c] == want[r][c]);
  }

  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = 0; j < t.rows.size(); ++j)
      CHECK(inner(t.rows[i], t.rows[j]) == C(i == j ? 1 : 0));
}

TEST_CASE("symmetric and exterior powers satisfy the standard identities") {
  const CharacterTable& t = psl_table();
  const ClassFunction& w3 = t.row("W3");

  for (long k = 0; k <= 6; ++k) {
    CHECK(sym_power(w3, k).dimension() == C(binom(k + 2, 2)));
    CHECK(ext_power(w3, k).dimension() == C(binom(3, k)));
  }
  CHECK(ext_power(t.row("W7"), 3).dimension() == C(binom(7, 3)));

  for (const auto& row : t.rows) {
    ClassFunction split = cf_add(sym_power(row, 2), ext_power(row, 2));
    ClassFunction square = tensor(row, row);
    for (long c = 0; c < t.group->class_count(); ++c) CHECK(split.at_class(c) == square.at_class(c));
  }

  ClassFunction det3 = ext_power(w3, 3);
  for (long c = 0; c < t.group->class_count(); ++c) CHECK(det3.at_class(c) == C(1));

  ClassFunction w3v = t.row("W3v");
  for (long c = 0; c < t.group->class_count(); ++c) {
    CHECK(dual(w3).at_class(c) == w3v.at_class(c));
    CHECK(dual(dual(w3)).at_class(c) == w3.at_class(c));
  }
}

TEST_CASE("decompose recovers the structure constants") {
  const CharacterTable& t = psl_table();
  const ClassFunction& w3 = t.row("W3");
  const ClassFunction& w3v = t.row("W3v");
  const ClassFunction& w7 = t.row("W7");

  CHECK(decompose(sym_power(w3, 2), t) == std::vector<long>{0, 0, 0, 1, 0, 0});
  CHECK(decompose(ext_power(w3v, 2), t) == std::vector<long>{0, 1, 0, 0, 0, 0});
  CHECK(decompose(sym_power(w3v, 3), t) == std::vector<long>{0, 1, 0, 0, 1, 0});
  CHECK(decompose(tensor(w7, w3v), t) == std::vector<long>{0, 0, 0, 1, 1, 1});
  CHECK(decompose(ext_power(w7, 3), t) == std::vector<long>{1, 0, 0, 2, 2, 1});

  const CharacterTable& ct = cover_table();
  CHECK(decompose(sym_power(ct.row("U4"), 4), ct) ==
        std::vector<long>{1, 0, 0, 2, 2, 1, 0, 0});
}

TEST_CASE("decompose recovers random multiplicity vectors") {
  for (const CharacterTable* t : {&psl_table(), &cover_table()}) {
    for (int it = 0; it < 60; ++it) {
      std::vector<long> m(t->rows.size());
      for (auto& v : m) v = pick(4);
      CHECK(decompose(combine(*t, m), *t) == m);
    }
  }
}

TEST_CASE("decompose rejects non-characters and foreign groups") {
  const CharacterTable& t = psl_table();
  ClassFunction fourteen = cf_add(cf_add(t.row("I"), t.row("W6")), t.row("W7"));
  CHECK(decompose(fourteen, t) == std::vector<long>{1, 0, 0, 1, 1, 0});

  ClassFunction virtual_cf = cf_sub(t.row("W6"), t.row("W3"));
  CHECK(!try_decompose(virtual_cf, t));
  CHECK_THROWS_AS(decompose(virtual_cf, t), math_error);

  ClassFunction half = zero_cf(*t.group);
  half.values[0] = CycNum(make_rational(3, 2));
  CHECK(!try_decompose(cf_add(t.row("W3"), half), t));

  CHECK_THROWS_AS(decompose(trivial_character(cover_group()), t), math_error);
  CHECK_THROWS_AS(cf_add(t.row("I"), trivial_character(cover_group())), math_error);
}

TEST_CASE("inner products are conjugate symmetric and additive") {
  const CharacterTable& t = psl_table();
  const CharacterTable& ct = cover_table();
  for (int it = 0; it < 100; ++it) {
    const CharacterTable& tab = it % 2 ? ct : t;
    const ClassFunction& a = tab.rows[static_cast<size_t>(pick(static_cast<long>(tab.rows.size())))];
    const ClassFunction& b = tab.rows[static_cast<size_t>(pick(static_cast<long>(tab.rows.size())))];
    const ClassFunction& c = tab.rows[static_cast<size_t>(pick(static_cast<long>(tab.rows.size())))];
    CHECK(inner(a, b) == inner(b, a).conj());
    auto [x, y] = CycNum::aligned(inner(a, c), inner(b, c));
    CHECK(inner(cf_add(a, b), c) == x + y);
  }
}

TEST_CASE("restriction to the order-42 preimage splits as printed") {
  SubgroupHandle h = cover_preimage_of_order(21);
  CHECK(h.order() == 42);
  RestrictionSummary u4 = restrict_and_decompose(cover_table().row("U4"), cover_group(), h);
  RestrictionSummary u8 = restrict_and_decompose(cover_table().row("U8"), cover_group(), h);

  CHECK(u4.norm == C(2));
  CHECK(u8.norm == C(4));
  CHECK(support_dims(u4) == std::multiset<long>{1, 3});
  CHECK(support_dims(u8) == std::multiset<long>{1, 1, 3, 3});
  for (long m : u4.multiplicities) CHECK(m <= 1);
  for (long m : u8.multiplicities) CHECK(m <= 1);

  size_t u4_three = 0, u4_one = 0;
  for (size_t i : support(u4)) (u4.dims[i] == 3 ? u4_three : u4_one) = i;
  CHECK(u8.multiplicities[u4_three] == 1);
  CHECK(u8.multiplicities[u4_one] == 0);
  CHECK(dot(u4.multiplicities, u8.multiplicities) == 1);
}

TEST_CASE("restrictions to the remaining binary subgroups") {
  const ClassFunction& u4 = cover_table().row("U4");

  SUBCASE("order 12") {
    RestrictionSummary r = restrict_and_decompose(u4, cover_group(), cover_preimage_of_order(6));
    CHECK(r.norm == C(3));
    CHECK(support_dims(r) == std::multiset<long>{1, 1, 2});
    CHECK(support(r).size() == 3);
  }
  SUBCASE("order 16") {
    RestrictionSummary r = restrict_and_decompose(u4, cover_group(), cover_preimage_of_order(8));
    CHECK(r.norm == C(2));
    CHECK(support_dims(r) == std::multiset<long>{2, 2});
    CHECK(support(r).size() == 2);
  }
  SUBCASE("order 24") {
    for (size_t which : {size_t(0), size_t(1)}) {
      RestrictionSummary r =
          restrict_and_decompose(u4, cover_group(), cover_preimage_of_order(12, which));
      CHECK(r.norm == C(2));
      CHECK(support_dims(r) == std::multiset<long>{2, 2});
      CHECK(support(r).size() == 2);
    }
  }
  SUBCASE("order 48") {
    for (size_t which : {size_t(0), size_t(1)}) {
      RestrictionSummary r =
          restrict_and_decompose(u4, cover_group(), cover_preimage_of_order(24, which));
      CHECK(r.norm == C(1));
      CHECK(support_dims(r) == std::multiset<long>{4});
      CHECK(support(r).size() == 1);
    }
  }
}

TEST_CASE("degree-6 row restricted to the order-12 plane subgroups") {
  SubgroupSearch s = subgroups_of_order(psl_p2(), 12);
  REQUIRE(s.representatives.size() == 2);
  for (const SubgroupHandle& h : s.representatives) {
    RestrictionSummary r = restrict_and_decompose(psl_table().row("W6"), psl_p2(), h);
    CHECK(r.norm == C(4));
    CHECK(support_dims(r) == std::multiset<long>{1, 1, 1, 3});
    CHECK(support(r).size() == 4);
  }
}

TEST_CASE("cyclic subgroups decompose against the cyclic table") {
  const FiniteMatrixGroup& g = cover_group();
  long id8 = -1, id7 = -1;
  for (long i = 0; i < g.order() && (id8 < 0 || id7 < 0); ++i) {
    if (g.element_order(i) == 8) id8 = i;
    if (g.element_order(i) == 7) id7 = i;
  }
  REQUIRE(id8 >= 0);
  REQUIRE(id7 >= 0);

  SubgroupHandle z8{span_in_group(g, {id8}, 16), {id8}, "", };
  RestrictionSummary r8 = restrict_and_decompose(cover_table().row("U4"), g, z8);
  CHECK(r8.labels == std::vector<std::string>{"chi0", "chi1", "chi2", "chi3", "chi4", "chi5", "chi6", "chi7"});
  CHECK(r8.dims == std::vector<long>(8, 1));
  CHECK(r8.multiplicities == std::vector<long>{0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(r8.norm == C(4));

  SubgroupHandle z7{span_in_group(g, {id7}, 14), {id7}, "", };
  RestrictionSummary r7 = restrict_and_decompose(cover_table().row("U4"), g, z7);
  CHECK(r7.dims == std::vector<long>(7, 1));
  CHECK(r7.multiplicities[0] == 1);
  long total = 0;
  for (long m : r7.multiplicities) {
    CHECK(m >= 0);
    CHECK(m <= 1);
    total += m;
  }
  CHECK(total == 4);
  CHECK(r7.norm == C(4));
}

TEST_CASE("catalog handles the plane subgroup tables and rejects unknown groups") {
  FiniteMatrixGroup s4 = FiniteMatrixGroup::generate({mat_A3(), mat_B3(), mat_C3()}, 30);
  REQUIRE(s4.order() == 24);
  CharacterTable t = catalog_table(s4);
  CHECK(t.complete);
  std::multiset<long> dims;
  for (const auto& row : t.rows) dims.insert(row.dimension().to_rational().get_num().get_si());
  CHECK(dims == std::multiset<long>{1, 1, 2, 3, 3});
  std::vector<long> m = decompose(character_of(s4), t);
  long covered = 0, maxm = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    covered += m[i] * t.rows[i].dimension().to_rational().get_num().get_si();
    maxm = std::max(maxm, m[i]);
  }
  CHECK(covered == 3);
  CHECK(maxm == 1);

  CycNum i = sqrt_minus_one();
  FiniteMatrixGroup q8 = FiniteMatrixGroup::generate(
      {CycMatrix::diagonal({i, -i}), CycMatrix({{C(0), C(1)}, {C(-1), C(0)}})}, 10);
  REQUIRE(q8.order() == 8);
  CHECK(group_label(q8) == "other");
  CHECK_THROWS_AS(catalog_table(q8), math_error);
}

TEST_CASE("fusion and restriction plumbing rejects bad input") {
  const FiniteMatrixGroup& parent = psl_p2();
  CycNum i = sqrt_minus_one();
  FiniteMatrixGroup q8 = FiniteMatrixGroup::generate(
      {CycMatrix::diagonal({i, -i}), CycMatrix({{C(0), C(1)}, {C(-1), C(0)}})}, 10);
  CHECK_THROWS_AS(fusion_map(parent, q8), math_error);

  FiniteMatrixGroup s4 = FiniteMatrixGroup::generate({mat_A3(), mat_B3(), mat_C3()}, 30);
  FusionMap short_map{{0}};
  CHECK_THROWS_AS(restrict_cf(psl_table().row("W6"), s4, short_map), math_error);

  long id3 = -1;
  for (long x = 0; x < parent.order() && id3 < 0; ++x)
    if (parent.element_order(x) == 3) id3 = x;
  REQUIRE(id3 >= 0);
  SubgroupHandle broken{{0, id3}, {}, ""};
  CHECK_THROWS_AS(subgroup_as_group(parent, broken), math_error);

  CHECK_THROWS_AS(restrict_and_decompose(psl_table().row("W6"), cover_group(),
                                         cover_preimage_of_order(21)),
                  math_error);
}

TEST_CASE("group labels recognize the two ambient groups") {
  CHECK(group_label(psl_p2()) == "PSL(2,7)");
  CHECK(group_label(cover_group()) == "SL(2,7)");
  CHECK(group_label(psl_p3()) == "PSL(2,7)");
}
