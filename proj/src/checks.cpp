#include "klein168/checks.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "klein168/apolarity.hpp"
#include "klein168/characters.hpp"
#include "klein168/diophantine.hpp"
#include "klein168/geometry.hpp"
#include "klein168/groebner.hpp"
#include "klein168/invariants.hpp"

namespace klein {

namespace {

using nlohmann::json;

const FiniteMatrixGroup& cover() {
  static FiniteMatrixGroup g = FiniteMatrixGroup::generate(space_generators(), 400);
  return g;
}

const FiniteMatrixGroup& psl3() {
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

const CharacterTable& lifted_table() {
  static CharacterTable t = build_cover_table(cover(), quotient_table());
  return t;
}

const InvariantCatalog& catalog() {
  static InvariantCatalog c = build_klein_invariants();
  return c;
}

const std::vector<OrbitRecord>& specials() {
  static std::vector<OrbitRecord> v = special_orbits_p3(cover(), psl3());
  return v;
}

const std::vector<long>& proj_map() {
  static std::vector<long> p = projection_map(cover(), psl3());
  return p;
}

SubgroupHandle preimage_of(long m, size_t which = 0) {
  SubgroupSearch s = subgroups_of_order(psl3(), m);
  if (s.representatives.size() <= which) throw math_error("subgroup search came up short");
  return preimage_in_cover(cover(), psl3(), proj_map(), s.representatives[which]).full;
}

// accumulates named assertions; the payload keeps got/want pairs so a failed
// run documents itself
struct Probe {
  json detail = json::object();
  bool ok = true;

  void that(const std::string& key, bool cond) {
    detail[key] = cond;
    ok = ok && cond;
  }
  void eq(const std::string& key, long got, long want) {
    detail[key] = json{{"got", got}, {"want", want}};
    ok = ok && got == want;
  }
  void eq(const std::string& key, const std::vector<long>& got, const std::vector<long>& want) {
    detail[key] = json{{"got", got}, {"want", want}};
    ok = ok && got == want;
  }
  void eq(const std::string& key, const CycNum& got, const CycNum& want) {
    detail[key] = json{{"got", got.str()}, {"want", want.str()}};
    ok = ok && got == want;
  }
  void note(const std::string& key, const json& value) { detail[key] = value; }
  std::pair<std::string, json> done() const { return {ok ? "pass" : "fail", detail}; }
};

std::vector<long> sorted_class_sizes(const FiniteMatrixGroup& g) {
  std::vector<long> sizes;
  for (const auto& c : g.classes()) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::multiset<long> restriction_dims(const RestrictionSummary& r) {
  std::multiset<long> out;
  for (size_t i = 0; i < r.multiplicities.size(); ++i)
    for (long k = 0; k < r.multiplicities[i]; ++k) out.insert(r.dims[i]);
  return out;
}

json dims_json(const std::multiset<long>& m) { return json(std::vector<long>(m.begin(), m.end())); }

void check_restriction(Probe& p, const std::string& key, const RestrictionSummary& r, long norm,
                       const std::multiset<long>& dims) {
  p.eq(key + "-norm", r.norm, CycNum(norm));
  std::multiset<long> got = restriction_dims(r);
  p.note(key + "-dims", dims_json(got));
  p.that(key + "-pattern", got == dims);
}

using CheckFn = std::function<std::pair<std::string, json>(const CheckConfig&)>;

std::pair<std::string, json> check_group_orders(const CheckConfig&) {
  Probe p;
  p.eq("cover-order", cover().order(), 336);
  p.eq("quotient-order", psl3().order(), 168);
  p.eq("plane-order", plane().order(), 168);
  p.eq("cover-scalars", cover().scalar_count(), 2);
  p.eq("cover-dimension", cover().dimension(), 4);
  p.eq("plane-dimension", plane().dimension(), 3);
  return p.done();
}

std::pair<std::string, json> check_class_sizes_quotient(const CheckConfig&) {
  Probe p;
  p.eq("sizes", sorted_class_sizes(psl3()), {1, 21, 24, 24, 42, 56});
  p.eq("sizes-plane-model", sorted_class_sizes(plane()), {1, 21, 24, 24, 42, 56});
  return p.done();
}

std::pair<std::string, json> check_class_sizes_cover(const CheckConfig&) {
  Probe p;
  p.eq("sizes", sorted_class_sizes(cover()), {1, 1, 24, 24, 24, 24, 42, 42, 42, 56, 56});
  return p.done();
}

std::pair<std::string, json> check_class_equation(const CheckConfig&) {
  Probe p;
  for (const auto* g : {&cover(), &psl3(), &plane()}) {
    long sum = 0;
    bool divides = true;
    for (const auto& c : g->classes()) {
      sum += c.size;
      divides = divides && g->order() % c.size == 0;
    }
    std::string tag = std::to_string(g->order()) + (g->projective() ? "-projective" : "-linear");
    p.eq("sum-" + tag, sum, g->order());
    p.that("sizes-divide-" + tag, divides);
  }
  return p.done();
}

std::pair<std::string, json> check_character_table_quotient(const CheckConfig&) {
  Probe p;
  const CharacterTable& t = quotient_table();
  p.eq("rows", static_cast<long>(t.rows.size()), 6);
  p.that("complete", t.complete);
  std::vector<long> dims;
  long sum_sq = 0;
  for (const auto& r : t.rows) {
    long d = static_cast<long>(r.dimension().to_rational().get_num().get_si());
    dims.push_back(d);
    sum_sq += d * d;
  }
  std::sort(dims.begin(), dims.end());
  p.eq("dims", dims, {1, 3, 3, 6, 7, 8});
  p.eq("dims-squared-sum", sum_sq, 168);
  return p.done();
}

std::pair<std::string, json> check_character_orthogonality(const CheckConfig&) {
  Probe p;
  for (const CharacterTable* t : {&quotient_table(), &lifted_table()}) {
    bool rows_ok = true;
    for (size_t i = 0; i < t->rows.size(); ++i)
      for (size_t j = 0; j < t->rows.size(); ++j)
        rows_ok = rows_ok && inner(t->rows[i], t->rows[j]) == CycNum(i == j ? 1 : 0);
    p.that("rows-" + std::to_string(t->rows.size()), rows_ok);
  }
  // column relation on the complete six-row table
  const CharacterTable& t = quotient_table();
  const FiniteMatrixGroup& g = *t.group;
  bool cols_ok = true;
  for (long a = 0; a < g.class_count(); ++a)
    for (long b = 0; b < g.class_count(); ++b) {
      CycNum s(0);
      for (const auto& r : t.rows) s += r.at_class(a) * r.at_class(b).conj();
      CycNum want = a == b ? CycNum(g.order() / g.classes()[static_cast<size_t>(a)].size) : CycNum(0);
      cols_ok = cols_ok && s == want;
    }
  p.that("columns", cols_ok);
  return p.done();
}

std::pair<std::string, json> check_character_table_cover(const CheckConfig&) {
  Probe p;
  const CharacterTable& t = lifted_table();
  p.eq("rows", static_cast<long>(t.rows.size()), 8);
  p.eq("u4-dim", t.row("U4").dimension(), CycNum(4));
  p.eq("u8-dim", t.row("U8").dimension(), CycNum(8));
  p.eq("u4-norm", inner(t.row("U4"), t.row("U4")), CycNum(1));
  p.eq("u8-norm", inner(t.row("U8"), t.row("U8")), CycNum(1));
  bool orth = true;
  for (const std::string faithful : {"U4", "U8"})
    for (const std::string lifted : {"I", "W3", "W3v", "W6", "W7", "W8"})
      orth = orth && inner(t.row(faithful), t.row(lifted)).is_zero();
  p.that("faithful-rows-orthogonal-to-lifted", orth);
  return p.done();
}

std::pair<std::string, json> check_tensor_decompositions(const CheckConfig&) {
  Probe p;
  const CharacterTable& t = quotient_table();
  const ClassFunction& w3 = t.row("W3");
  p.eq("sym2-w3", decompose(sym_power(w3, 2), t), {0, 0, 0, 1, 0, 0});
  p.eq("ext2-w3-dual", decompose(ext_power(dual(w3), 2), t), {0, 1, 0, 0, 0, 0});
  p.eq("sym3-w3-dual", decompose(sym_power(dual(w3), 3), t), {0, 1, 0, 0, 1, 0});
  p.eq("w7-tensor-w3-dual", decompose(tensor(t.row("W7"), dual(w3)), t), {0, 0, 0, 1, 1, 1});
  p.eq("ext3-w7", decompose(ext_power(t.row("W7"), 3), t), {1, 0, 0, 2, 2, 1});
  const CharacterTable& ct = lifted_table();
  p.eq("sym4-u4", decompose(sym_power(ct.row("U4"), 4), ct), {1, 0, 0, 2, 2, 1, 0, 0});
  return p.done();
}

std::pair<std::string, json> check_restriction_order_42(const CheckConfig&) {
  Probe p;
  SubgroupHandle h = preimage_of(21);
  p.eq("preimage-order", h.order(), 42);
  RestrictionSummary u4 = restrict_and_decompose(lifted_table().row("U4"), cover(), h);
  RestrictionSummary u8 = restrict_and_decompose(lifted_table().row("U8"), cover(), h);
  check_restriction(p, "u4", u4, 2, {1, 3});
  check_restriction(p, "u8", u8, 4, {1, 1, 3, 3});
  long shared = 0;
  for (size_t i = 0; i < u4.multiplicities.size(); ++i) shared += u4.multiplicities[i] * u8.multiplicities[i];
  p.eq("shared-constituents", shared, 1);
  return p.done();
}

std::pair<std::string, json> check_restriction_order_48(const CheckConfig&) {
  Probe p;
  const ClassFunction& u4 = lifted_table().row("U4");
  for (size_t which : {size_t(0), size_t(1)}) {
    RestrictionSummary r = restrict_and_decompose(u4, cover(), preimage_of(24, which));
    check_restriction(p, "class-" + std::to_string(which), r, 1, {4});
  }
  return p.done();
}

std::pair<std::string, json> check_restriction_order_24(const CheckConfig&) {
  Probe p;
  const ClassFunction& u4 = lifted_table().row("U4");
  for (size_t which : {size_t(0), size_t(1)}) {
    RestrictionSummary r = restrict_and_decompose(u4, cover(), preimage_of(12, which));
    check_restriction(p, "class-" + std::to_string(which), r, 2, {2, 2});
  }
  return p.done();
}

std::pair<std::string, json> check_restriction_order_16(const CheckConfig&) {
  Probe p;
  RestrictionSummary r = restrict_and_decompose(lifted_table().row("U4"), cover(), preimage_of(8));
  check_restriction(p, "u4", r, 2, {2, 2});
  return p.done();
}

std::pair<std::string, json> check_restriction_order_12(const CheckConfig&) {
  Probe p;
  RestrictionSummary r = restrict_and_decompose(lifted_table().row("U4"), cover(), preimage_of(6));
  check_restriction(p, "u4", r, 3, {1, 1, 2});
  return p.done();
}

std::pair<std::string, json> check_restriction_plane_12(const CheckConfig&) {
  Probe p;
  SubgroupSearch s = subgroups_of_order(plane(), 12);
  p.eq("classes", static_cast<long>(s.representatives.size()), 2);
  for (size_t which = 0; which < s.representatives.size(); ++which) {
    RestrictionSummary r =
        restrict_and_decompose(quotient_table().row("W6"), plane(), s.representatives[which]);
    check_restriction(p, "class-" + std::to_string(which), r, 4, {1, 1, 1, 3});
  }
  return p.done();
}

std::pair<std::string, json> check_invariant_forms(const CheckConfig&) {
  Probe p;
  const InvariantCatalog& c = catalog();
  std::vector<CycMatrix> sp = space_generators();
  p.that("phi4", is_invariant(c.phi4, sp));
  p.that("phi6", is_invariant(c.phi6, sp));
  p.that("phi8", is_invariant(c.phi8, sp));
  p.that("phi8p", is_invariant(c.phi8p, sp));
  p.that("phi14", is_invariant(c.phi14, sp));
  std::vector<CycMatrix> pl = plane_generators();
  p.that("klein-eps", is_invariant(c.klein_eps, pl));
  p.that("hessian-sextic", is_invariant(c.hessian_sextic, pl));
  p.that("klein-v22-own-stabilizer", is_invariant(c.klein_v22, v22_stabilizer_generators()));
  p.note("klein-v22-under-plane-generators", is_invariant(c.klein_v22, pl));
  p.that("klein-v22-needs-its-own-model", !is_invariant(c.klein_v22, pl));
  return p.done();
}

std::pair<std::string, json> check_invariant_dimensions(const CheckConfig&) {
  Probe p;
  std::vector<long> got;
  for (long d = 1; d <= 6; ++d) got.push_back(invariant_dim(cover(), d));
  p.eq("dims-degree-1-to-6", got, {0, 0, 0, 1, 0, 1});
  return p.done();
}

std::pair<std::string, json> check_reynolds_projection(const CheckConfig&) {
  Probe p;
  const InvariantCatalog& c = catalog();
  p.that("fixes-invariant", reynolds(cover(), c.phi4) == c.phi4);
  SparsePoly probe = SparsePoly::monomial(4, {4, 0, 0, 0}, CycNum(1));
  SparsePoly averaged = reynolds(cover(), probe);
  p.that("matches-serial", averaged == reynolds_serial(cover(), probe));
  p.that("lands-invariant", is_invariant(averaged, space_generators()));
  p.that("projects-onto-quartic-line", averaged * c.phi4.coeff({4, 0, 0, 0}) ==
                                           c.phi4 * averaged.coeff({4, 0, 0, 0}));
  return p.done();
}

std::pair<std::string, json> check_catalog_files(const CheckConfig&) {
  Probe p;
  InvariantCatalog bundled = load_catalog(data_file("invariants"));
  bool same = true;
  for (const std::string& name : catalog_entry_names())
    same = same && catalog_entry(bundled, name) == catalog_entry(catalog(), name);
  p.that("bundled-matches-rebuilt", same);
  return p.done();
}

std::pair<std::string, json> check_orbit_census(const CheckConfig&) {
  Probe p;
  const auto& s = specials();
  p.eq("count", static_cast<long>(s.size()), 4);
  std::vector<long> sizes, stabs;
  std::vector<std::string> labels, stab_labels;
  std::set<std::string> keys;
  for (const auto& o : s) {
    sizes.push_back(o.size());
    stabs.push_back(o.stabilizer_order);
    labels.push_back(o.label);
    stab_labels.push_back(o.stabilizer_label);
    for (const auto& pt : o.points) keys.insert(pt.key());
  }
  p.eq("sizes", sizes, {8, 24, 28, 28});
  p.eq("stabilizer-orders", stabs, {21, 7, 6, 6});
  p.that("labels", labels == std::vector<std::string>{"Sigma8", "Sigma24", "Sigma28", "Sigma28p"});
  p.that("stabilizer-labels",
         stab_labels == std::vector<std::string>{"Z7:Z3", "Z7", "S3", "S3"});
  p.eq("distinct-points", static_cast<long>(keys.size()), 88);
  p.that("two-distinct-28-orbits", s[2].points[0].key() != s[3].points[0].key());
  return p.done();
}

std::pair<std::string, json> check_orbit_files(const CheckConfig&) {
  Probe p;
  const char* names[] = {"orbits/sigma8.pts", "orbits/sigma24.pts", "orbits/sigma28.pts",
                         "orbits/sigma28p.pts"};
  for (size_t i = 0; i < 4; ++i) {
    std::vector<ProjPoint> pts = load_point_file(data_file(names[i]));
    bool same = pts.size() == specials()[i].points.size();
    for (size_t k = 0; same && k < pts.size(); ++k) same = pts[k] == specials()[i].points[k];
    p.that(names[i], same);
  }
  std::vector<ProjPoint> mp = load_point_file(data_file("orbits/min_p2.pts"));
  OrbitRecord computed = min_orbit_p2(plane());
  bool same = mp.size() == computed.points.size();
  for (size_t k = 0; same && k < mp.size(); ++k) same = mp[k] == computed.points[k];
  p.that("orbits/min_p2.pts", same);
  return p.done();
}

std::pair<std::string, json> check_quartic_on_orbits(const CheckConfig&) {
  Probe p;
  const InvariantCatalog& c = catalog();
  bool zero4 = true, zero6 = true;
  for (const auto& pt : specials()[1].points) {
    zero4 = zero4 && c.phi4.evaluate(pt.coords()).is_zero();
    zero6 = zero6 && c.phi6.evaluate(pt.coords()).is_zero();
  }
  p.that("quartic-vanishes-on-24-orbit", zero4);
  p.that("sextic-vanishes-on-24-orbit", zero6);
  bool nonzero = true;
  for (const auto& pt : specials()[0].points) nonzero = nonzero && !c.phi4.evaluate(pt.coords()).is_zero();
  p.that("quartic-misses-8-orbit", nonzero);
  return p.done();
}

std::pair<std::string, json> check_min_plane_orbit(const CheckConfig&) {
  Probe p;
  OrbitRecord r = min_orbit_p2(plane());
  p.eq("size", r.size(), 21);
  p.eq("stabilizer-order", r.stabilizer_order, 8);
  p.that("stabilizer-label", r.stabilizer_label == "D4");
  return p.done();
}

std::pair<std::string, json> check_small_orbit_sizes(const CheckConfig&) {
  Probe p;
  std::set<long> allowed = {1, 7, 8, 14, 21, 24, 28};
  std::set<long> observed = transitive_orbit_sizes(psl3(), 41);
  p.that("index-census", observed == allowed);
  p.note("observed", json(std::vector<long>(observed.begin(), observed.end())));
  bool census_sizes = true;
  for (const auto& o : specials()) census_sizes = census_sizes && allowed.count(o.size()) == 1;
  p.that("census-orbits-in-list", census_sizes);
  return p.done();
}

std::pair<std::string, json> check_conditions_sigma8(const CheckConfig&) {
  Probe p;
  p.eq("rank-quadrics", conditions_rank(specials()[0].points, 2), 7);
  return p.done();
}

std::pair<std::string, json> check_conditions_sigma24(const CheckConfig&) {
  long r1 = conditions_rank(specials()[1].points, 4);
  std::vector<ProjPoint> shuffled(specials()[1].points.rbegin(), specials()[1].points.rend());
  long r2 = conditions_rank(shuffled, 4);
  json payload{{"rank-quartics", r1}, {"repeat-agrees", r1 == r2}};
  return {r1 == r2 ? "reported" : "fail", payload};
}

std::pair<std::string, json> check_conditions_sigma28(const CheckConfig&) {
  long r1 = conditions_rank(specials()[2].points, 4);
  std::vector<ProjPoint> shuffled(specials()[2].points.rbegin(), specials()[2].points.rend());
  long r2 = conditions_rank(shuffled, 4);
  json payload{{"rank-quartics", r1}, {"repeat-agrees", r1 == r2}};
  return {r1 == r2 ? "reported" : "fail", payload};
}

std::pair<std::string, json> check_conditions_sigma28p(const CheckConfig&) {
  long r1 = conditions_rank(specials()[3].points, 4);
  std::vector<ProjPoint> shuffled(specials()[3].points.rbegin(), specials()[3].points.rend());
  long r2 = conditions_rank(shuffled, 4);
  json payload{{"rank-quartics", r1}, {"repeat-agrees", r1 == r2}};
  return {r1 == r2 ? "reported" : "fail", payload};
}

std::pair<std::string, json> check_genus_table(const CheckConfig& cfg) {
  Probe p;
  static const long want[11][6] = {{0, 3, 1, 1, 0, 1},  {0, 8, 0, 2, 1, 0},  {0, 10, 1, 0, 1, 1},
                                   {0, 15, 0, 1, 2, 0}, {0, 15, 3, 1, 0, 0}, {0, 17, 0, 2, 0, 1},
                                   {0, 19, 1, 0, 0, 2}, {0, 22, 0, 0, 3, 0}, {0, 22, 3, 0, 1, 0},
                                   {0, 24, 0, 1, 1, 1}, {0, 29, 2, 2, 0, 0}};
  std::vector<BranchDatum> rows = rh_enumerate(30);
  p.eq("rows", static_cast<long>(rows.size()), 11);
  bool match = rows.size() == 11;
  for (size_t i = 0; match && i < rows.size(); ++i) {
    const BranchDatum& r = rows[i];
    match = r.quotient_genus == want[i][0] && r.genus == want[i][1] && r.a2 == want[i][2] &&
            r.a3 == want[i][3] && r.a4 == want[i][4] && r.a7 == want[i][5];
    match = match && r.satisfies_identity();
  }
  p.that("table", match);
  if (cfg.rh_gmax != 30) p.note("rows-at-configured-cap", static_cast<long>(rh_enumerate(cfg.rh_gmax).size()));
  return p.done();
}

std::pair<std::string, json> check_curve_orbit_sizes(const CheckConfig&) {
  Probe p;
  std::set<long> got = curve_orbit_sizes();
  p.that("sizes", got == std::set<long>{24, 42, 56, 84, 168});
  p.note("observed", json(std::vector<long>(got.begin(), got.end())));
  return p.done();
}

std::pair<std::string, json> check_orbit_sum_representability(const CheckConfig&) {
  Probe p;
  std::vector<long> w;
  p.that("60-not-representable", !representable_as_orbit_sum(60));
  p.that("90-representable", representable_as_orbit_sum(90, w));
  p.eq("90-witness", w, {2, 1, 0, 0, 0});
  p.that("120-representable", representable_as_orbit_sum(120, w));
  p.eq("120-witness", w, {5, 0, 0, 0, 0});
  return p.done();
}

std::pair<std::string, json> check_castelnuovo_values(const CheckConfig&) {
  Probe p;
  std::vector<long> got;
  for (long d = 3; d <= 12; ++d) got.push_back(castelnuovo(d));
  p.eq("degree-3-to-12", got, {0, 1, 2, 4, 6, 9, 12, 16, 20, 25});
  return p.done();
}

std::pair<std::string, json> check_ideal_dimensions(const CheckConfig& cfg) {
  Probe p;
  const InvariantCatalog& c = catalog();
  p.eq("f4-f6-f8p", projective_dimension({c.phi4, c.phi6, c.phi8p}, cfg.primes), 0);
  p.eq("f4-f6-f14", projective_dimension({c.phi4, c.phi6, c.phi14}, cfg.primes), 0);
  p.eq("f4-f8p-f14", projective_dimension({c.phi4, c.phi8p, c.phi14}, cfg.primes), 0);
  return p.done();
}

std::pair<std::string, json> check_smooth_hypersurfaces(const CheckConfig& cfg) {
  Probe p;
  const InvariantCatalog& c = catalog();
  p.that("quartic-threefold", is_smooth_hypersurface(c.phi4, cfg.primes));
  p.that("hessian-sextic-curve", is_smooth_hypersurface(c.hessian_sextic, cfg.primes));
  p.that("plane-quartic", is_smooth_hypersurface(c.klein_eps, cfg.primes));
  return p.done();
}

std::pair<std::string, json> check_catalecticant(const CheckConfig&) {
  Probe p;
  Catalecticant ck = catalecticant(catalog().klein_eps);
  p.that("nondegenerate", !ck.determinant.is_zero());
  p.eq("rank", ck.rank, 6);
  p.eq("determinant-conductor", ck.determinant.conductor(), 7);
  p.that("determinant-in-quadratic-subfield", ck.determinant.galois(2) == ck.determinant);
  p.note("determinant", ck.determinant.str());
  p.eq("v22-determinant", catalecticant(catalog().klein_v22).determinant, CycNum(-46656));
  return p.done();
}

std::vector<SparsePoly> hexagon_case(const std::string& name) {
  SparsePoly x = SparsePoly::variable(3, 0), y = SparsePoly::variable(3, 1),
             z = SparsePoly::variable(3, 2);
  if (name == "z4") {
    CycNum i = sqrt_minus_one();
    return {x - z * i, x + z * i, y + x * i, y - x * i, z + y * i, z - y * i};
  }
  if (name == "final") return {x - z, x + z, y - x, y + x, z - y, z + y};
  throw math_error("unknown hexagon case: " + name);
}

std::pair<std::string, json> check_hexagon_z4(const CheckConfig&) {
  Probe p;
  SolveResult r = powersum_solve(catalog().klein_eps, hexagon_case("z4"));
  p.that("inconsistent", r.status == SolveStatus::inconsistent);
  p.eq("rank-system", r.rank_system, 6);
  p.eq("rank-augmented", r.rank_augmented, 7);
  return p.done();
}

std::pair<std::string, json> check_hexagon_final(const CheckConfig&) {
  Probe p;
  SolveResult r = powersum_solve(catalog().klein_eps, hexagon_case("final"));
  p.that("inconsistent", r.status == SolveStatus::inconsistent);
  p.eq("rank-system", r.rank_system, 6);
  p.eq("rank-augmented", r.rank_augmented, 7);
  return p.done();
}

std::pair<std::string, json> check_powersum_roundtrip(const CheckConfig&) {
  Probe p;
  SparsePoly x = SparsePoly::variable(3, 0), y = SparsePoly::variable(3, 1),
             z = SparsePoly::variable(3, 2);
  std::vector<SparsePoly> lines = {x, y, z, x + y, y + z, x + y + z};
  SparsePoly f(3);
  for (const auto& l : lines) f = f + l.pow(4);
  SolveResult r = powersum_solve(f, lines);
  p.that("solved", r.status == SolveStatus::solved);
  p.eq("rank-system", r.rank_system, 6);
  bool ones = r.multipliers.size() == 6;
  for (const auto& m : r.multipliers) ones = ones && m == CycNum(1);
  p.that("unit-multipliers", ones);
  return p.done();
}

std::pair<std::string, json> check_apolar_embedding(const CheckConfig&) {
  Probe p;
  p.eq("v22-rank", apolar_embedding(catalog().klein_v22).rank, 3);
  p.eq("eps-rank", apolar_embedding(catalog().klein_eps).rank, 3);
  p.eq("fourth-power-rank", apolar_embedding(SparsePoly::monomial(3, {4, 0, 0}, CycNum(1))).rank, 1);
  return p.done();
}

std::pair<std::string, json> check_skew_form_kernels(const CheckConfig&) {
  Probe p;
  SkewFormBundle b = spusk_forms(catalog().klein_eps);
  p.eq("kernel-dims", b.ker_dimensions, {4, 4, 4});
  p.that("partials-annihilated", verify_spusk(catalog().klein_eps));
  p.that("v22-model-too", verify_spusk(catalog().klein_v22));
  return p.done();
}

std::pair<std::string, json> check_cyclotomic_axioms(const CheckConfig& cfg) {
  Probe p;
  long n = cfg.conductor;
  if (n < 1 || n > 1000) throw math_error("conductor out of range");
  CycNum z = CycNum::zeta(n);
  CycNum zn(1);
  for (long k = 0; k < n; ++k) zn *= z;
  p.eq("zeta-power-n", zn, CycNum(1));
  const auto& phi = cyclotomic_polynomial(n);
  CycNum acc(0), pw(1);
  for (const auto& coef : phi) {
    acc += pw * CycNum(Rational(coef));
    pw *= z;
  }
  p.that("minimal-polynomial-vanishes", acc.is_zero());
  CycNum a = z + CycNum(1), b = z * z - CycNum(3), c = z - CycNum(2);
  p.that("distributive", (a + b) * c == a * c + b * c);
  p.that("inverse", n == 1 || (z.inverse() * z == CycNum(1)));
  p.that("minimize-round-trip", z.embed(n * 2).minimized() == z);
  return p.done();
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = [] {
    std::vector<std::pair<std::string, CheckFn>> v = {
        {"apolar-embedding", check_apolar_embedding},
        {"castelnuovo-values", check_castelnuovo_values},
        {"catalecticant-nondegenerate", check_catalecticant},
        {"catalog-files", check_catalog_files},
        {"character-orthogonality", check_character_orthogonality},
        {"character-table-cover", check_character_table_cover},
        {"character-table-quotient", check_character_table_quotient},
        {"class-equation", check_class_equation},
        {"class-sizes-cover", check_class_sizes_cover},
        {"class-sizes-quotient", check_class_sizes_quotient},
        {"conditions-rank-sigma24", check_conditions_sigma24},
        {"conditions-rank-sigma28", check_conditions_sigma28},
        {"conditions-rank-sigma28p", check_conditions_sigma28p},
        {"conditions-rank-sigma8", check_conditions_sigma8},
        {"curve-orbit-sizes", check_curve_orbit_sizes},
        {"cyclotomic-axioms", check_cyclotomic_axioms},
        {"genus-table", check_genus_table},
        {"group-orders", check_group_orders},
        {"hexagon-difference-factors", check_hexagon_final},
        {"hexagon-z4", check_hexagon_z4},
        {"ideal-dimensions", check_ideal_dimensions},
        {"invariant-dimensions", check_invariant_dimensions},
        {"invariant-forms", check_invariant_forms},
        {"min-plane-orbit", check_min_plane_orbit},
        {"orbit-census", check_orbit_census},
        {"orbit-files", check_orbit_files},
        {"orbit-sum-representability", check_orbit_sum_representability},
        {"powersum-roundtrip", check_powersum_roundtrip},
        {"quartic-on-orbits", check_quartic_on_orbits},
        {"restriction-order-12", check_restriction_order_12},
        {"restriction-order-16", check_restriction_order_16},
        {"restriction-order-24", check_restriction_order_24},
        {"restriction-order-42", check_restriction_order_42},
        {"restriction-order-48", check_restriction_order_48},
        {"restriction-plane-12", check_restriction_plane_12},
        {"reynolds-projection", check_reynolds_projection},
        {"skew-form-kernels", check_skew_form_kernels},
        {"small-orbit-sizes", check_small_orbit_sizes},
        {"smooth-hypersurfaces", check_smooth_hypersurfaces},
        {"tensor-decompositions", check_tensor_decompositions},
    };
    return v;
  }();
  return r;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_long(const std::string& s, const std::string& key) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw parse_error("");
    return v;
  } catch (const std::exception&) {
    throw parse_error("config: bad integer for " + key + ": " + s);
  }
}

}  // namespace

CheckConfig CheckConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open config file: " + path);
  CheckConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw parse_error("config: expected key = value, got: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "conductor") {
      cfg.conductor = parse_long(value, key);
    } else if (key == "rh_gmax") {
      cfg.rh_gmax = parse_long(value, key);
    } else if (key == "primes") {
      cfg.primes.clear();
      for (const std::string& item : split_list(value)) cfg.primes.push_back(parse_long(item, key));
    } else if (key == "selection") {
      cfg.selection = split_list(value);
    } else {
      throw parse_error("config: unknown key: " + key);
    }
  }
  return cfg;
}

std::vector<std::string> available_checks() {
  std::vector<std::string> out;
  for (const auto& [id, fn] : registry()) out.push_back(id);
  return out;
}

ReportOutcome run_report(const CheckConfig& cfg) {
  ReportOutcome outcome;
  std::map<std::string, CheckFn> lookup;
  for (const auto& [id, fn] : registry()) lookup[id] = fn;

  std::vector<std::string> ids;
  if (cfg.selection.empty()) {
    for (const auto& [id, fn] : registry()) ids.push_back(id);
  } else {
    std::set<std::string> seen;
    for (const std::string& id : cfg.selection) {
      if (!lookup.count(id)) {
        outcome.results.push_back(
            {id, "fail", nlohmann::json{{"error", "unknown check id"}}, 0.0});
        outcome.exit_code = 2;
        return outcome;
      }
      if (seen.insert(id).second) ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
  }

  outcome.results.assign(ids.size(), CheckResult{});
  bool any_fail = false, any_data_missing = false;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < static_cast<long>(ids.size()); ++i) {
    CheckResult& res = outcome.results[static_cast<size_t>(i)];
    res.id = ids[static_cast<size_t>(i)];
    auto start = std::chrono::steady_clock::now();
    try {
      auto [status, payload] = lookup[res.id](cfg);
      res.status = status;
      res.payload = payload;
    } catch (const parse_error& e) {
      res.status = "fail";
      res.payload = nlohmann::json{{"error", e.what()}, {"kind", "input"}};
#ifdef _OPENMP
#pragma omp critical
#endif
      any_data_missing = true;
    } catch (const std::exception& e) {
      res.status = "fail";
      res.payload = nlohmann::json{{"error", e.what()}};
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.status == "fail") {
#ifdef _OPENMP
#pragma omp critical
#endif
      any_fail = true;
    }
  }

  outcome.exit_code = any_data_missing ? 2 : (any_fail ? 1 : 0);
  return outcome;
}

std::string report_json(const ReportOutcome& outcome) {
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json timing = nlohmann::json::object();
  for (const CheckResult& r : outcome.results) {
    checks.push_back({{"id", r.id}, {"status", r.status}, {"payload", r.payload}});
    timing[r.id] = r.seconds;
  }
  nlohmann::json doc{{"checks", checks}, {"exit_code", outcome.exit_code}, {"timing_seconds", timing}};
  return doc.dump(2) + "\n";
}

}  // namespace klein
