// Acceptance gate: one criterion per invocation, argv[1] in 1..11.
// Prints one PASS/FAIL line per sub-check and a final verdict line;
// exit 0 iff every sub-check of the requested criterion passed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "klein168/apolarity.hpp"
#include "klein168/characters.hpp"
#include "klein168/diophantine.hpp"
#include "klein168/geometry.hpp"
#include "klein168/groebner.hpp"
#include "klein168/invariants.hpp"

using namespace klein;

namespace {

std::mt19937 rng(20230826);

long pick(long n) {
  std::uniform_int_distribution<long> d(0, n - 1);
  return d(rng);
}

struct Gate {
  int passed = 0, failed = 0;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      ++passed;
      std::printf("PASS %s\n", name.c_str());
    } else {
      ++failed;
      std::printf("FAIL %s%s%s\n", name.c_str(), detail.empty() ? "" : ": ", detail.c_str());
    }
    std::fflush(stdout);
  }
};

CycNum C(long v) { return CycNum(v); }

const FiniteMatrixGroup& cover() {
  static FiniteMatrixGroup g = FiniteMatrixGroup::generate(space_generators(), 400);
  return g;
}

const FiniteMatrixGroup& quotient() {
  static FiniteMatrixGroup g = cover().projectivize(200);
  return g;
}

const FiniteMatrixGroup& plane() {
  static FiniteMatrixGroup g = FiniteMatrixGroup::generate(plane_generators(), 200);
  return g;
}

const CharacterTable& quotient_table() {
  static CharacterTable t = build_psl_table(plane());
  return t;
}

const CharacterTable& cover_table() {
  static CharacterTable t = build_cover_table(cover(), quotient_table());
  return t;
}

const InvariantCatalog& catalog() {
  static InvariantCatalog c = build_klein_invariants();
  return c;
}

SubgroupHandle preimage_of(long m, size_t which) {
  static std::map<long, SubgroupSearch> cache;
  if (!cache.count(m)) cache[m] = subgroups_of_order(quotient(), m);
  static std::vector<long> proj;
  if (proj.empty()) proj = projection_map(cover(), quotient());
  return preimage_in_cover(cover(), quotient(), proj, cache[m].representatives.at(which)).full;
}

std::vector<long> sorted_sizes(const FiniteMatrixGroup& g) {
  std::vector<long> s;
  for (const auto& c : g.classes()) s.push_back(c.size);
  std::sort(s.begin(), s.end());
  return s;
}

std::string vec_str(const std::vector<long>& v) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "}";
  return out.str();
}

std::multiset<long> constituent_dims(const RestrictionSummary& r) {
  std::multiset<long> out;
  for (size_t i = 0; i < r.multiplicities.size(); ++i)
    for (long k = 0; k < r.multiplicities[i]; ++k) out.insert(r.dims[i]);
  return out;
}

std::string dims_str(const std::multiset<long>& m) {
  return vec_str(std::vector<long>(m.begin(), m.end()));
}

void criterion_1(Gate& gate) {
  gate.check("closure of the two quaternary generators has order 336", cover().order() == 336);
  gate.check("projectivization has order 168", quotient().order() == 168);
  gate.check("quotient class sizes are {1,21,24,24,42,56}",
             sorted_sizes(quotient()) == std::vector<long>{1, 21, 24, 24, 42, 56},
             "got " + vec_str(sorted_sizes(quotient())));
  gate.check("cover class sizes are {1,1,24,24,24,24,42,42,42,56,56}",
             sorted_sizes(cover()) ==
                 std::vector<long>{1, 1, 24, 24, 24, 24, 42, 42, 42, 56, 56},
             "got " + vec_str(sorted_sizes(cover())));
}

void criterion_2(Gate& gate) {
  const CharacterTable& t = quotient_table();
  const FiniteMatrixGroup& g = *t.group;

  CycNum e = epsilon7(), eb = e.conj();
  std::vector<std::vector<CycNum>> want = {
      {C(1), C(1), C(1), C(1), C(1), C(1)},
      {C(3), C(-1), C(0), C(1), e, eb},
      {C(3), C(-1), C(0), C(1), eb, e},
      {C(6), C(2), C(0), C(0), C(-1), C(-1)},
      {C(7), C(-1), C(1), C(-1), C(0), C(0)},
      {C(8), C(0), C(-1), C(0), C(1), C(1)}};
  auto grid = t.grid();
  bool values_ok = grid.size() == 6;
  for (size_t r = 0; values_ok && r < 6; ++r)
    for (size_t c = 0; c < 6; ++c) values_ok = values_ok && grid[r][c] == want[r][c];
  gate.check("all 36 character values reproduced exactly", values_ok);

  bool rows_ok = true;
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = 0; j < t.rows.size(); ++j)
      rows_ok = rows_ok && inner(t.rows[i], t.rows[j]) == C(i == j ? 1 : 0);
  gate.check("first orthogonality relation exact", rows_ok);

  bool cols_ok = true;
  for (long c = 0; c < g.class_count(); ++c)
    for (long d = 0; d < g.class_count(); ++d) {
      CycNum s(0);
      for (const auto& row : t.rows) {
        auto [x, y] = CycNum::aligned(s, row.at_class(c) * row.at_class(d).conj());
        s = x + y;
      }
      CycNum want_cd =
          c == d ? CycNum(make_rational(168, g.classes()[static_cast<size_t>(c)].size)) : C(0);
      cols_ok = cols_ok && s == want_cd;
    }
  gate.check("second orthogonality relation exact", cols_ok);

  long dimsq = 0;
  for (const auto& row : t.rows)
    dimsq += row.dimension().to_rational().get_num().get_si() *
             row.dimension().to_rational().get_num().get_si();
  gate.check("sum of squared dimensions is 168", dimsq == 168);

  const CharacterTable& ct = cover_table();
  gate.check("re-derived degree-4 row has norm 1", inner(ct.row("U4"), ct.row("U4")) == C(1));
  gate.check("validated degree-8 row has norm 1", inner(ct.row("U8"), ct.row("U8")) == C(1));
  bool orth = true;
  for (const std::string faithful : {"U4", "U8"})
    for (const std::string lifted : {"I", "W3", "W3v", "W6", "W7", "W8"})
      orth = orth && inner(ct.row(faithful), ct.row(lifted)).is_zero();
  gate.check("faithful rows orthogonal to every pulled-back row", orth);
}

void criterion_3(Gate& gate) {
  const CharacterTable& t = quotient_table();
  const ClassFunction& w3 = t.row("W3");
  auto same = [&](const ClassFunction& chi, const std::vector<long>& m) {
    return decompose(chi, t) == m;
  };
  gate.check("Sym2(W3) = W6", same(sym_power(w3, 2), {0, 0, 0, 1, 0, 0}));
  gate.check("Ext2(W3 dual) = W3", same(ext_power(dual(w3), 2), {0, 1, 0, 0, 0, 0}));
  gate.check("Sym3(W3 dual) = W7 + W3", same(sym_power(dual(w3), 3), {0, 1, 0, 0, 1, 0}));
  gate.check("W7 (x) W3 dual = W6 + W7 + W8",
             same(tensor(t.row("W7"), dual(w3)), {0, 0, 0, 1, 1, 1}));
  gate.check("Ext3(W7) = I + 2W6 + 2W7 + W8",
             same(ext_power(t.row("W7"), 3), {1, 0, 0, 2, 2, 1}));
  const CharacterTable& ct = cover_table();
  gate.check("Sym4(U4) = I + 2W6 + 2W7 + W8",
             decompose(sym_power(ct.row("U4"), 4), ct) ==
                 std::vector<long>{1, 0, 0, 2, 2, 1, 0, 0});
}

void criterion_4(Gate& gate) {
  const ClassFunction& u4 = cover_table().row("U4");
  const ClassFunction& u8 = cover_table().row("U8");

  SubgroupHandle h42 = preimage_of(21, 0);
  RestrictionSummary r4 = restrict_and_decompose(u4, cover(), h42);
  RestrictionSummary r8 = restrict_and_decompose(u8, cover(), h42);
  gate.check("U4 over the order-42 preimage splits as 3 + 1",
             constituent_dims(r4) == std::multiset<long>{1, 3} && r4.norm == C(2),
             "got " + dims_str(constituent_dims(r4)));
  gate.check("U8 over the order-42 preimage splits as 3 + 3' + 1' + 1''",
             constituent_dims(r8) == std::multiset<long>{1, 1, 3, 3} && r8.norm == C(4),
             "got " + dims_str(constituent_dims(r8)));
  long shared = 0, shared_dim = 0;
  bool one_repeat = true;
  for (size_t i = 0; i < r4.multiplicities.size(); ++i) {
    if (r4.multiplicities[i] > 0 && r8.multiplicities[i] > 0) {
      shared += r4.multiplicities[i] * r8.multiplicities[i];
      shared_dim = r4.dims[i];
    }
    one_repeat = one_repeat && r4.multiplicities[i] <= 1 && r8.multiplicities[i] <= 1;
  }
  gate.check("the three 1-dimensional constituents are pairwise distinct",
             one_repeat && shared == 1 && shared_dim == 3,
             "shared constituents: " + std::to_string(shared));

  for (size_t which : {size_t(0), size_t(1)}) {
    RestrictionSummary r = restrict_and_decompose(u4, cover(), preimage_of(24, which));
    gate.check("U4 over order-48 preimage class " + std::to_string(which) +
                   " splits into two 2-dimensional constituents",
               constituent_dims(r) == std::multiset<long>{2, 2} && r.norm == C(2),
               "computed restriction is irreducible: norm " + r.norm.str() +
                   ", constituents " + dims_str(constituent_dims(r)) +
                   "; the stated split is not what the matrices give");
  }

  for (size_t which : {size_t(0), size_t(1)}) {
    RestrictionSummary r = restrict_and_decompose(u4, cover(), preimage_of(12, which));
    gate.check("U4 over order-24 preimage class " + std::to_string(which) + " splits as 2 + 2'",
               constituent_dims(r) == std::multiset<long>{2, 2} && r.norm == C(2),
               "got " + dims_str(constituent_dims(r)));
  }

  RestrictionSummary r16 = restrict_and_decompose(u4, cover(), preimage_of(8, 0));
  gate.check("U4 over the order-16 preimage splits as 2 + 2'",
             constituent_dims(r16) == std::multiset<long>{2, 2} && r16.norm == C(2),
             "got " + dims_str(constituent_dims(r16)));

  RestrictionSummary r12 = restrict_and_decompose(u4, cover(), preimage_of(6, 0));
  gate.check("U4 over the order-12 preimage splits as 2 + 1 + 1'",
             constituent_dims(r12) == std::multiset<long>{1, 1, 2} && r12.norm == C(3),
             "got " + dims_str(constituent_dims(r12)));

  gate.check("inner(chi4, chi4) = 2 over the order-42 preimage", r4.norm == C(2),
             "got " + r4.norm.str());
  gate.check("inner(chi4, chi4) = 2 over the order-16 preimage", r16.norm == C(2),
             "got " + r16.norm.str());
}

void criterion_5(Gate& gate) {
  auto start = std::chrono::steady_clock::now();
  const InvariantCatalog& c = catalog();
  std::vector<CycMatrix> sp = space_generators();
  gate.check("degree-4 form invariant under both quaternary generators", is_invariant(c.phi4, sp));
  gate.check("degree-6 form invariant", is_invariant(c.phi6, sp));
  gate.check("degree-8 form invariant", is_invariant(c.phi8, sp));
  gate.check("second degree-8 form invariant", is_invariant(c.phi8p, sp));
  gate.check("degree-14 form invariant", is_invariant(c.phi14, sp));

  std::vector<CycMatrix> pl = plane_generators();
  gate.check("epsilon-model plane quartic invariant under the four plane generators",
             is_invariant(c.klein_eps, pl));
  gate.check("cubic-edge-model plane quartic invariant under the four plane generators",
             is_invariant(c.klein_v22, pl),
             "computed false in every scalar normalization; the form is fixed by its own "
             "order-21 stabilizer (verified: " +
                 std::string(is_invariant(c.klein_v22, v22_stabilizer_generators()) ? "true"
                                                                                    : "false") +
                 "), which is a different conjugate of the same plane group");

  std::vector<long> dims;
  for (long d = 1; d <= 6; ++d) dims.push_back(invariant_dim(cover(), d));
  gate.check("invariant dimension 0 in degrees 1,2,3,5",
             dims[0] == 0 && dims[1] == 0 && dims[2] == 0 && dims[4] == 0,
             "got " + vec_str(dims));
  gate.check("invariant dimension 1 in degree 4", dims[3] == 1, "got " + vec_str(dims));
  gate.check("invariant dimension at most 1 through degree 6",
             *std::max_element(dims.begin(), dims.end()) <= 1, "got " + vec_str(dims));

  bool agree = true;
  std::string where;
  for (long d = 7; d <= 8; ++d) {
    try {
      dims.push_back(invariant_dim(cover(), d));
    } catch (const math_error& e) {
      agree = false;
      where = "degree " + std::to_string(d) + ": " + e.what();
    }
  }
  gate.check("character and Reynolds dimension counts agree through degree 8", agree, where);

  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  gate.check("criterion runtime under 10 minutes", secs < 600.0,
             std::to_string(secs) + " s");
}

void criterion_6(Gate& gate) {
  std::vector<OrbitRecord> s = special_orbits_p3(cover(), quotient());
  std::vector<long> sizes;
  for (const auto& o : s) sizes.push_back(o.size());
  gate.check("special orbit census has sizes {8,24,28,28}",
             sizes == std::vector<long>{8, 24, 28, 28}, "got " + vec_str(sizes));
  gate.check("the size-8 and size-24 orbits are unique",
             s.size() == 4 && s[0].size() == 8 && s[1].size() == 24);
  bool distinct = s.size() == 4 && s[2].size() == 28 && s[3].size() == 28;
  if (distinct) {
    std::set<std::string> keys;
    for (const auto& p : s[2].points) keys.insert(p.key());
    bool overlap = false;
    for (const auto& p : s[3].points) overlap = overlap || keys.count(p.key());
    distinct = !overlap;
  }
  gate.check("the two 28-point orbits are disjoint", distinct);

  bool vanishes = true;
  for (const auto& p : s[1].points) vanishes = vanishes && catalog().phi4.evaluate(p.coords()).is_zero();
  gate.check("the degree-4 invariant vanishes identically on the 24-point orbit", vanishes);

  gate.check("smallest plane orbit has 21 points", min_orbit_size_p2(plane()) == 21);

  std::set<long> allowed = {1, 7, 8, 14, 21, 24, 28};
  std::set<long> observed = transitive_orbit_sizes(quotient(), 41);
  bool subset = true;
  for (long v : observed) subset = subset && allowed.count(v) == 1;
  gate.check("every orbit size at most 41 lies in {1,7,8,14,21,24,28}", subset);
}

void criterion_7(Gate& gate) {
  static const long want[11][6] = {{0, 3, 1, 1, 0, 1},  {0, 8, 0, 2, 1, 0},  {0, 10, 1, 0, 1, 1},
                                   {0, 15, 0, 1, 2, 0}, {0, 15, 3, 1, 0, 0}, {0, 17, 0, 2, 0, 1},
                                   {0, 19, 1, 0, 0, 2}, {0, 22, 0, 0, 3, 0}, {0, 22, 3, 0, 1, 0},
                                   {0, 24, 0, 1, 1, 1}, {0, 29, 2, 2, 0, 0}};
  std::vector<BranchDatum> rows = rh_enumerate(30);
  bool match = rows.size() == 11;
  std::string detail = "got " + std::to_string(rows.size()) + " rows";
  for (size_t i = 0; match && i < 11; ++i)
    match = rows[i].quotient_genus == want[i][0] && rows[i].genus == want[i][1] &&
            rows[i].a2 == want[i][2] && rows[i].a3 == want[i][3] && rows[i].a4 == want[i][4] &&
            rows[i].a7 == want[i][5];
  gate.check("branch-data enumeration to genus 30 reproduces the 11-row table", match, detail);

  gate.check("curve orbit sizes are {24,42,56,84,168}",
             curve_orbit_sizes(quotient()) == std::set<long>{24, 42, 56, 84, 168});

  gate.check("60 is not an orbit-sum", !representable_as_orbit_sum(60));

  std::vector<long> w;
  bool rep90 = representable_as_orbit_sum(90, w);
  gate.check("90 is not an orbit-sum", !rep90,
             "computed representable: 90 = 2*24 + 42, witness " + vec_str(w) +
                 "; the stated non-representability does not hold");
  bool rep120 = representable_as_orbit_sum(120, w);
  gate.check("120 is not an orbit-sum", !rep120,
             "computed representable: 120 = 5*24, witness " + vec_str(w) +
                 "; the stated non-representability does not hold");
}

void criterion_8(Gate& gate) {
  const InvariantCatalog& c = catalog();
  const std::vector<long>& primes = default_primes();
  gate.check("certificates use two distinct primes",
             primes.size() == 2 && primes[0] != primes[1]);

  struct Triple {
    const char* name;
    std::vector<SparsePoly> gens;
  };
  std::vector<Triple> triples = {{"{f4, f6, f8'}", {c.phi4, c.phi6, c.phi8p}},
                                 {"{f4, f6, f14}", {c.phi4, c.phi6, c.phi14}},
                                 {"{f4, f8', f14}", {c.phi4, c.phi8p, c.phi14}}};
  for (const auto& t : triples) {
    auto start = std::chrono::steady_clock::now();
    long dim = projective_dimension(t.gens, primes);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    gate.check(std::string("projective dimension of ") + t.name + " is 0", dim == 0,
               "got " + std::to_string(dim));
    gate.check(std::string("runtime for ") + t.name + " under 10 minutes", secs < 600.0,
               std::to_string(secs) + " s");
  }

  gate.check("degree-4 invariant defines a smooth threefold",
             is_smooth_hypersurface(c.phi4, primes));
  gate.check("Hessian sextic is a smooth plane curve",
             is_smooth_hypersurface(c.hessian_sextic, primes));
}

void criterion_9(Gate& gate) {
  const InvariantCatalog& c = catalog();
  gate.check("epsilon-model quartic has nondegenerate middle catalecticant",
             !is_degenerate(c.klein_eps));

  SparsePoly x = SparsePoly::variable(3, 0), y = SparsePoly::variable(3, 1),
             z = SparsePoly::variable(3, 2);
  CycNum i = sqrt_minus_one();
  std::vector<SparsePoly> z4 = {x - z * i, x + z * i, y + x * i,
                                y - x * i, z + y * i, z - y * i};
  SolveResult r1 = powersum_solve(c.klein_eps, z4);
  gate.check("power-sum system for the quadratic-residue hexagon is inconsistent",
             r1.status == SolveStatus::inconsistent && r1.rank_system == 6 &&
                 r1.rank_augmented == 7,
             "ranks " + std::to_string(r1.rank_system) + "/" + std::to_string(r1.rank_augmented));

  std::vector<SparsePoly> fin = {x - z, x + z, y - x, y + x, z - y, z + y};
  SolveResult r2 = powersum_solve(c.klein_eps, fin);
  gate.check("power-sum system for the difference-factor hexagon is inconsistent",
             r2.status == SolveStatus::inconsistent && r2.rank_system == 6 &&
                 r2.rank_augmented == 7,
             "ranks " + std::to_string(r2.rank_system) + "/" + std::to_string(r2.rank_augmented));

  std::vector<SparsePoly> lines = {x, y, z, x + y, y + z, x + y + z};
  SparsePoly f(3);
  for (const auto& l : lines) f = f + l.pow(4);
  SolveResult r3 = powersum_solve(f, lines);
  bool ones = r3.status == SolveStatus::solved && r3.multipliers.size() == 6;
  if (ones)
    for (const auto& m : r3.multipliers) ones = ones && m == C(1);
  gate.check("round trip recovers unit multipliers on a sum of six independent fourth powers",
             ones);

  gate.check("the three skew forms annihilate every partial derivative",
             verify_spusk(c.klein_eps));
}

void criterion_10(Gate& gate) {
  std::vector<OrbitRecord> s = special_orbits_p3(cover(), quotient());

  for (size_t idx : {size_t(2), size_t(3)}) {
    long r1 = conditions_rank(s[idx].points, 4);
    std::vector<ProjPoint> reversed(s[idx].points.rbegin(), s[idx].points.rend());
    long r2 = conditions_rank(reversed, 4);
    gate.check(s[idx].label + " quartic-conditions rank identical across runs (rank " +
                   std::to_string(r1) + ")",
               r1 == r2, "got " + std::to_string(r1) + " and " + std::to_string(r2));
  }

  gate.check("the 8-point orbit imposes 7 conditions on quadrics",
             conditions_rank(s[0].points, 2) == 7,
             "got " + std::to_string(conditions_rank(s[0].points, 2)));
}

void criterion_11(Gate& gate) {
  {
    int cases = 0;
    bool ok = true;
    for (long n : {7L, 28L}) {
      CycNum zeta = CycNum::zeta(n);
      for (int t = 0; t < 110; ++t) {
        auto rand_elt = [&] {
          CycNum v(0), p(1);
          for (int k = 0; k < 4; ++k) {
            v = v + p * CycNum(pick(9) - 4);
            p *= zeta;
          }
          return v;
        };
        CycNum a = rand_elt(), b = rand_elt(), c = rand_elt();
        ok = ok && (a + b) + c == a + (b + c);
        ok = ok && (a * b) * c == a * (b * c);
        ok = ok && a * (b + c) == a * b + a * c;
        ok = ok && a + CycNum(0) == a && a * CycNum(1) == a;
        ok = ok && a * b == b * a;
        if (!a.is_zero()) ok = ok && a * a.inverse() == CycNum(1);
        ++cases;
      }
    }
    gate.check("cyclotomic ring axioms, " + std::to_string(cases) + " randomized cases",
               ok && cases >= 200);
  }

  {
    int cases = 0;
    bool ok = true;
    std::vector<OrbitRecord> s = special_orbits_p3(cover(), quotient());
    for (int t = 0; t < 200; ++t) {
      ProjPoint p = [&] {
        if (t % 5 == 0) {
          const OrbitRecord& o = s[static_cast<size_t>(pick(4))];
          return o.points[static_cast<size_t>(pick(o.size()))];
        }
        std::vector<CycNum> coords(4, CycNum(0));
        while (true) {
          bool nonzero = false;
          for (auto& v : coords) {
            v = CycNum(pick(7) - 3);
            nonzero = nonzero || !v.is_zero();
          }
          if (nonzero) return ProjPoint(coords);
        }
      }();
      OrbitRecord rec = orbit(quotient(), p);
      ok = ok && rec.size() * rec.stabilizer_order == quotient().order();
      ++cases;
    }
    gate.check("orbit-stabilizer identity, " + std::to_string(cases) + " randomized cases",
               ok && cases >= 200);
  }

  {
    int cases = 0;
    bool ok = true;
    for (const FiniteMatrixGroup* g : {&cover(), &quotient(), &plane()}) {
      long sum = 0;
      for (const auto& c : g->classes()) {
        sum += c.size;
        ok = ok && g->order() % c.size == 0;
      }
      ok = ok && sum == g->order();
    }
    const FiniteMatrixGroup& g = quotient();
    for (int t = 0; t < 200; ++t) {
      long a = pick(g.order()), h = pick(g.order());
      ok = ok && g.class_of(g.mul(g.mul(h, a), g.inv(h))) == g.class_of(a);
      long cls = g.class_of(a);
      long centralizer = 0;
      if (t % 10 == 0) {
        for (long x = 0; x < g.order(); ++x)
          if (g.mul(x, a) == g.mul(a, x)) ++centralizer;
        ok = ok && centralizer * g.classes()[static_cast<size_t>(cls)].size == g.order();
      }
      ++cases;
    }
    gate.check("class equation and conjugation invariance, " + std::to_string(cases) +
                   " randomized cases",
               ok && cases >= 200);
  }

  {
    int cases = 0;
    bool ok = true;
    const long p = 31991;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      int nvars = 2 + static_cast<int>(pick(2));
      std::vector<PrimeFieldPoly> gens;
      int ngens = 2 + static_cast<int>(pick(2));
      for (int k = 0; k < ngens; ++k) {
        SparsePoly f(nvars);
        int terms = 2 + static_cast<int>(pick(4));
        for (int s = 0; s < terms; ++s) {
          std::vector<int> e(static_cast<size_t>(nvars), 0);
          for (int v = 0; v < nvars; ++v) e[static_cast<size_t>(v)] = static_cast<int>(pick(3));
          f = f + SparsePoly::monomial(nvars, e, CycNum(1 + pick(9)));
        }
        if (f.is_zero()) f = SparsePoly::variable(nvars, 0);
        gens.push_back(reduce_mod_p(f, p));
      }
      GroebnerBasis reference = buchberger(gens);
      for (int shuffle = 0; shuffle < 5; ++shuffle) {
        std::shuffle(gens.begin(), gens.end(), rng);
        ok = ok && buchberger(gens).polys == reference.polys;
        ++cases;
      }
    }
    gate.check("reduced basis independent of generator order, " + std::to_string(cases) +
                   " randomized cases",
               ok && cases >= 200);
  }

  {
    int cases = 0;
    bool ok = true;
    for (int t = 0; t < 200; ++t) {
      const FiniteMatrixGroup& g = t % 2 == 0 ? cover() : plane();
      const CycMatrix& m = g.element(pick(g.order()));
      const CycMatrix& n = g.element(pick(g.order()));
      int nv = static_cast<int>(g.dimension());
      SparsePoly f(nv);
      for (int s = 0; s < 3; ++s) {
        std::vector<int> e(static_cast<size_t>(nv), 0);
        int deg = 1 + static_cast<int>(pick(3));
        for (int k = 0; k < deg; ++k) ++e[static_cast<size_t>(pick(nv))];
        f = f + SparsePoly::monomial(nv, e, CycNum(pick(9) - 4));
      }
      ok = ok && act(m * n, f) == act(n, act(m, f));
      ++cases;
    }
    gate.check("action law act(MN, f) = act(N, act(M, f)), " + std::to_string(cases) +
                   " randomized cases",
               ok && cases >= 200);
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..11>\n");
    return 2;
  }
  long n = std::atol(argv[1]);
  if (n < 1 || n > 11) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..11>\n");
    return 2;
  }

  Gate gate;
  auto start = std::chrono::steady_clock::now();
  try {
    switch (n) {
      case 1: criterion_1(gate); break;
      case 2: criterion_2(gate); break;
      case 3: criterion_3(gate); break;
      case 4: criterion_4(gate); break;
      case 5: criterion_5(gate); break;
      case 6: criterion_6(gate); break;
      case 7: criterion_7(gate); break;
      case 8: criterion_8(gate); break;
      case 9: criterion_9(gate); break;
      case 10: criterion_10(gate); break;
      case 11: criterion_11(gate); break;
    }
  } catch (const std::exception& e) {
    gate.check("criterion body completed without exception", false, e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %ld: %s (%d/%d sub-checks, %.1f s)\n", n,
              gate.failed == 0 ? "PASS" : "FAIL", gate.passed, gate.passed + gate.failed, secs);
  return gate.failed == 0 ? 0 : 1;
}
