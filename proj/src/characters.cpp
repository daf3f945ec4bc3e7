#include "klein168/characters.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace klein {

namespace {

CycNum addc(const CycNum& a, const CycNum& b) {
  auto [x, y] = CycNum::aligned(a, b);
  return x + y;
}

CycNum subc(const CycNum& a, const CycNum& b) {
  auto [x, y] = CycNum::aligned(a, b);
  return x - y;
}

CycNum mulc(const CycNum& a, const CycNum& b) {
  auto [x, y] = CycNum::aligned(a, b);
  return x * y;
}

std::vector<long> every_id(const FiniteMatrixGroup& g) {
  std::vector<long> v(static_cast<size_t>(g.order()));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::optional<Rational> as_rational(const CycNum& v) {
  CycNum m = v.minimized();
  if (m.conductor() != 1) return std::nullopt;
  return m.coeffs()[0];
}

long dim_as_long(const CycNum& v) {
  auto r = as_rational(v);
  if (!r || r->get_den() != 1) throw math_error("character dimension is not an integer");
  return static_cast<long>(r->get_num().get_si());
}

void check_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group == nullptr || a.group != b.group || a.values.size() != b.values.size())
    throw math_error("class functions live on different groups");
}

}  // namespace

CycNum ClassFunction::dimension() const {
  if (!group) throw math_error("class function has no group");
  return at_class(group->class_of(group->identity_id()));
}

ClassFunction trivial_character(const FiniteMatrixGroup& g) {
  ClassFunction f;
  f.group = &g;
  f.values.assign(static_cast<size_t>(g.class_count()), CycNum(1));
  return f;
}

ClassFunction character_of(const FiniteMatrixGroup& g) {
  if (g.projective()) throw math_error("character_of needs a linear matrix model, not a projective one");
  ClassFunction f;
  f.group = &g;
  for (const auto& c : g.classes()) f.values.push_back(g.element(c.representative).trace());
  return f;
}

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
  check_same_group(a, b);
  ClassFunction f;
  f.group = a.group;
  for (size_t i = 0; i < a.values.size(); ++i) f.values.push_back(addc(a.values[i], b.values[i]));
  return f;
}

ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b) {
  check_same_group(a, b);
  ClassFunction f;
  f.group = a.group;
  for (size_t i = 0; i < a.values.size(); ++i) f.values.push_back(subc(a.values[i], b.values[i]));
  return f;
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
  check_same_group(a, b);
  ClassFunction f;
  f.group = a.group;
  for (size_t i = 0; i < a.values.size(); ++i) f.values.push_back(mulc(a.values[i], b.values[i]));
  return f;
}

ClassFunction dual(const ClassFunction& a) {
  ClassFunction f;
  f.group = a.group;
  for (const auto& v : a.values) f.values.push_back(v.conj());
  return f;
}

CycNum inner(const ClassFunction& a, const ClassFunction& b) {
  check_same_group(a, b);
  const FiniteMatrixGroup& g = *a.group;
  CycNum total(0);
  for (long c = 0; c < g.class_count(); ++c) {
    CycNum term = mulc(a.at_class(c), b.at_class(c).conj());
    total = addc(total, mulc(term, CycNum(g.classes()[static_cast<size_t>(c)].size)));
  }
  return mulc(total, CycNum(make_rational(1, g.order()))).minimized();
}

namespace {

ClassFunction power_series_step(const ClassFunction& chi, const std::vector<ClassFunction>& lower,
                                long k, bool alternating) {
  const FiniteMatrixGroup& g = *chi.group;
  ClassFunction out;
  out.group = &g;
  for (long c = 0; c < g.class_count(); ++c) {
    long rep = g.classes()[static_cast<size_t>(c)].representative;
    CycNum acc(0);
    for (long i = 1; i <= k; ++i) {
      CycNum chi_power = chi.at_class(g.class_of(g.power(rep, i)));
      CycNum term = mulc(chi_power, lower[static_cast<size_t>(k - i)].at_class(c));
      if (alternating && i % 2 == 0) term = -term;
      acc = addc(acc, term);
    }
    out.values.push_back(mulc(acc, CycNum(make_rational(1, k))));
  }
  return out;
}

ClassFunction adams_chain(const ClassFunction& chi, long k, bool alternating) {
  if (k < 0) throw math_error("negative power of a character");
  std::vector<ClassFunction> chain;
  chain.push_back(trivial_character(*chi.group));
  for (long j = 1; j <= k; ++j) chain.push_back(power_series_step(chi, chain, j, alternating));
  return chain.back();
}

}  // namespace

ClassFunction sym_power(const ClassFunction& chi, long k) { return adams_chain(chi, k, false); }

ClassFunction ext_power(const ClassFunction& chi, long k) { return adams_chain(chi, k, true); }

long CharacterTable::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<long>(i);
  throw math_error("no table row labeled " + label);
}

const ClassFunction& CharacterTable::row(const std::string& label) const {
  return rows[static_cast<size_t>(index_of(label))];
}

std::vector<std::vector<CycNum>> CharacterTable::grid() const {
  std::vector<std::vector<CycNum>> out;
  for (const auto& r : rows) {
    std::vector<CycNum> line;
    for (long c : column_order) line.push_back(r.at_class(c).minimized());
    out.push_back(std::move(line));
  }
  return out;
}

std::optional<std::vector<long>> try_decompose(const ClassFunction& chi, const CharacterTable& table) {
  if (chi.group != table.group) return std::nullopt;
  std::vector<long> m;
  for (const auto& row : table.rows) {
    auto r = as_rational(inner(chi, row));
    if (!r || r->get_den() != 1 || *r < 0) return std::nullopt;
    m.push_back(static_cast<long>(r->get_num().get_si()));
  }
  CycNum covered(0);
  for (size_t i = 0; i < m.size(); ++i)
    covered = addc(covered, mulc(CycNum(m[i]), table.rows[i].dimension()));
  if (!(covered == chi.dimension())) return std::nullopt;
  return m;
}

std::vector<long> decompose(const ClassFunction& chi, const CharacterTable& table) {
  if (chi.group != table.group) throw math_error("class function and table live on different groups");
  auto m = try_decompose(chi, table);
  if (!m) throw math_error("not a non-negative integral combination of the table rows");
  return *m;
}

namespace {

bool rows_orthonormal(const std::vector<ClassFunction>& rows) {
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i; j < rows.size(); ++j)
      if (!(inner(rows[i], rows[j]) == CycNum(i == j ? 1 : 0))) return false;
  return true;
}

bool table_complete_checks(const FiniteMatrixGroup& g, const std::vector<ClassFunction>& rows) {
  if (static_cast<long>(rows.size()) != g.class_count()) return false;
  CycNum dimsq(0);
  for (const auto& r : rows) dimsq = addc(dimsq, mulc(r.dimension(), r.dimension()));
  if (!(dimsq == CycNum(g.order()))) return false;
  for (long c = 0; c < g.class_count(); ++c)
    for (long d = c; d < g.class_count(); ++d) {
      CycNum s(0);
      for (const auto& r : rows) s = addc(s, mulc(r.at_class(c), r.at_class(d).conj()));
      CycNum want = c == d ? CycNum(make_rational(g.order(), g.classes()[static_cast<size_t>(c)].size))
                           : CycNum(0);
      if (!(s == want)) return false;
    }
  return true;
}

}  // namespace

CharacterTable build_psl_table(const FiniteMatrixGroup& g, const ClassFunction& w3) {
  if (g.order() != 168 || g.class_count() != 6) throw math_error("not an order-168 group with 6 classes");
  if (w3.group != &g) throw math_error("w3 lives on a different group");
  ClassFunction one = trivial_character(g);
  ClassFunction w3v = dual(w3);
  ClassFunction w6 = sym_power(w3, 2);
  ClassFunction w7 = cf_sub(sym_power(w3v, 3), w3);
  ClassFunction w8 = cf_sub(cf_sub(tensor(w7, w3v), w6), w7);

  CharacterTable t;
  t.group = &g;
  t.labels = {"I", "W3", "W3v", "W6", "W7", "W8"};
  t.rows = {one, w3, w3v, w6, w7, w8};
  t.complete = true;
  if (!rows_orthonormal(t.rows) || !table_complete_checks(g, t.rows))
    throw math_error("constructed rows fail the orthogonality relations");

  std::vector<long> ids(6);
  std::iota(ids.begin(), ids.end(), 0);
  CycNum eps = epsilon7();
  std::sort(ids.begin(), ids.end(), [&](long a, long b) {
    long oa = g.classes()[static_cast<size_t>(a)].element_order;
    long ob = g.classes()[static_cast<size_t>(b)].element_order;
    if (oa != ob) return oa < ob;
    if (oa == 7) return w3.at_class(a) == eps;
    return a < b;
  });
  bool eps_seen = false;
  for (long c : ids)
    if (g.classes()[static_cast<size_t>(c)].element_order == 7 && w3.at_class(c) == eps) eps_seen = true;
  if (!eps_seen) throw math_error("no order-7 class carries the expected degree-3 trace");
  t.column_order = ids;
  return t;
}

CharacterTable build_psl_table(const FiniteMatrixGroup& g) { return build_psl_table(g, character_of(g)); }

CharacterTable build_cover_table(const FiniteMatrixGroup& cover, const CharacterTable& psl) {
  if (cover.order() != 336 || cover.class_count() != 11 || cover.scalar_count() != 2)
    throw math_error("not the order-336 cover");
  if (!psl.complete || psl.group == nullptr || psl.group->order() != 168)
    throw math_error("cover table needs the complete order-168 table");

  const FiniteMatrixGroup& pg = *psl.group;
  const ClassFunction& w3 = psl.row("W3");
  CycNum eps = epsilon7();
  std::map<std::string, long> psl_class;
  for (long c = 0; c < pg.class_count(); ++c) {
    long o = pg.classes()[static_cast<size_t>(c)].element_order;
    if (o == 7)
      psl_class[w3.at_class(c) == eps ? "seven" : "seven2"] = c;
    else
      psl_class[std::to_string(o)] = c;
  }
  if (psl_class.size() != 6) throw math_error("order-168 class orders are not 1,2,3,4,7,7");

  ClassFunction chi4 = character_of(cover);
  CycNum alpha = addc(CycNum(1), eps);
  CycNum abar = alpha.conj();

  std::vector<std::string> image_label(static_cast<size_t>(cover.class_count()));
  std::vector<bool> over_seven(static_cast<size_t>(cover.class_count()), false);
  for (long c = 0; c < cover.class_count(); ++c) {
    long o = cover.classes()[static_cast<size_t>(c)].element_order;
    CycNum v = chi4.at_class(c);
    switch (o) {
      case 1:
      case 2: image_label[static_cast<size_t>(c)] = "1"; break;
      case 3:
      case 6: image_label[static_cast<size_t>(c)] = "3"; break;
      case 4:
      case 8: image_label[static_cast<size_t>(c)] = o == 4 ? "2" : "4"; break;
      case 7:
      case 14: {
        bool seven = v == abar || v == -abar;
        if (!seven && !(v == alpha || v == -alpha))
          throw math_error("order-7 trace outside the expected values");
        over_seven[static_cast<size_t>(c)] = seven;
        image_label[static_cast<size_t>(c)] = seven ? "seven" : "seven2";
        break;
      }
      default: throw math_error("unexpected element order in the cover");
    }
  }

  CharacterTable t;
  t.group = &cover;
  t.labels = {"I", "W3", "W3v", "W6", "W7", "W8", "U4", "U8"};
  for (size_t r = 0; r < psl.rows.size(); ++r) {
    ClassFunction f;
    f.group = &cover;
    for (long c = 0; c < cover.class_count(); ++c)
      f.values.push_back(psl.rows[r].at_class(psl_class.at(image_label[static_cast<size_t>(c)])));
    t.rows.push_back(std::move(f));
  }

  ClassFunction u8;
  u8.group = &cover;
  for (long c = 0; c < cover.class_count(); ++c) {
    long o = cover.classes()[static_cast<size_t>(c)].element_order;
    long v = 0;
    if (o == 1) v = 8;
    if (o == 2) v = -8;
    if (o == 3) v = -1;
    if (o == 6) v = 1;
    if (o == 7) v = 1;
    if (o == 14) v = -1;
    u8.values.push_back(CycNum(v));
  }
  t.rows.push_back(chi4);
  t.rows.push_back(std::move(u8));
  t.complete = false;
  if (!rows_orthonormal(t.rows)) throw math_error("cover rows fail the orthogonality relations");

  std::vector<long> ids(static_cast<size_t>(cover.class_count()));
  std::iota(ids.begin(), ids.end(), 0);
  std::map<long, long> rank{{1, 0}, {2, 1}, {3, 2}, {6, 3}, {7, 4}, {14, 5}, {4, 6}, {8, 7}};
  std::sort(ids.begin(), ids.end(), [&](long a, long b) {
    long oa = cover.classes()[static_cast<size_t>(a)].element_order;
    long ob = cover.classes()[static_cast<size_t>(b)].element_order;
    if (oa != ob) return rank.at(oa) < rank.at(ob);
    if (oa == 7) return over_seven[static_cast<size_t>(a)] && !over_seven[static_cast<size_t>(b)];
    if (oa == 14) return !over_seven[static_cast<size_t>(a)] && over_seven[static_cast<size_t>(b)];
    return a < b;
  });
  t.column_order = ids;
  return t;
}

FiniteMatrixGroup subgroup_as_group(const FiniteMatrixGroup& parent, const SubgroupHandle& h) {
  if (h.members.empty()) throw math_error("empty subgroup handle");
  std::vector<CycMatrix> gens;
  for (long id : h.generators.empty() ? h.members : h.generators) gens.push_back(parent.element(id));
  FiniteMatrixGroup sub = FiniteMatrixGroup::generate(gens, h.order() + 1, parent.projective());
  if (sub.order() != h.order()) throw math_error("handle does not describe a closed subgroup");
  return sub;
}

FusionMap fusion_map(const FiniteMatrixGroup& parent, const FiniteMatrixGroup& sub) {
  FusionMap f;
  if (sub.dimension() != parent.dimension() || parent.conductor() % sub.conductor() != 0 ||
      sub.projective() != parent.projective())
    throw math_error("subgroup does not live inside the parent group");
  for (long c = 0; c < sub.class_count(); ++c) {
    CycMatrix rep = sub.element(sub.classes()[static_cast<size_t>(c)].representative);
    if (rep.conductor() != parent.conductor()) rep = rep.embed(parent.conductor());
    long pid = parent.id_of(rep);
    if (pid < 0) throw math_error("subgroup element is not in the parent group");
    long pc = parent.class_of(pid);
    if (parent.classes()[static_cast<size_t>(pc)].element_order !=
        sub.classes()[static_cast<size_t>(c)].element_order)
      throw math_error("fusion is not order-compatible");
    f.to_parent_class.push_back(pc);
  }
  return f;
}

ClassFunction restrict_cf(const ClassFunction& chi, const FiniteMatrixGroup& sub, const FusionMap& f) {
  if (static_cast<long>(f.to_parent_class.size()) != sub.class_count())
    throw math_error("fusion map does not match the subgroup");
  ClassFunction out;
  out.group = &sub;
  for (long c = 0; c < sub.class_count(); ++c)
    out.values.push_back(chi.at_class(f.to_parent_class[static_cast<size_t>(c)]));
  return out;
}

std::string group_label(const FiniteMatrixGroup& g) {
  return label_for_fingerprint(fingerprint_of(g, every_id(g)));
}

namespace {

struct CatEntry {
  std::vector<std::pair<long, long>> classes;  // (element order, class size)
  std::vector<std::vector<CycNum>> rows;
  std::vector<std::array<long, 3>> rules;  // representative(classes[a])^k lies in classes[b]
};

std::optional<CatEntry> catalog_entry(const std::string& label) {
  CycNum om = CycNum::zeta(3);
  CycNum om2 = om.galois(2);
  CycNum ii = sqrt_minus_one();
  CycNum r2 = CycNum::zeta(8) - CycNum::zeta(8).galois(3);
  CycNum e = epsilon7();
  CycNum eb = e.conj();
  auto C = [](long v) { return CycNum(v); };

  CatEntry t;
  if (label == "Z2xZ2") {
    t.classes = {{1, 1}, {2, 1}, {2, 1}, {2, 1}};
    t.rows = {{C(1), C(1), C(1), C(1)},
              {C(1), C(1), C(-1), C(-1)},
              {C(1), C(-1), C(1), C(-1)},
              {C(1), C(-1), C(-1), C(1)}};
    return t;
  }
  if (label == "S3") {
    t.classes = {{1, 1}, {2, 3}, {3, 2}};
    t.rows = {{C(1), C(1), C(1)}, {C(1), C(-1), C(1)}, {C(2), C(0), C(-1)}};
    return t;
  }
  if (label == "D4") {
    t.classes = {{1, 1}, {2, 1}, {4, 2}, {2, 2}, {2, 2}};
    t.rows = {{C(1), C(1), C(1), C(1), C(1)},
              {C(1), C(1), C(1), C(-1), C(-1)},
              {C(1), C(1), C(-1), C(1), C(-1)},
              {C(1), C(1), C(-1), C(-1), C(1)},
              {C(2), C(-2), C(0), C(0), C(0)}};
    t.rules = {{2, 2, 1}};
    return t;
  }
  if (label == "A4") {
    t.classes = {{1, 1}, {2, 3}, {3, 4}, {3, 4}};
    t.rows = {{C(1), C(1), C(1), C(1)},
              {C(1), C(1), om, om2},
              {C(1), C(1), om2, om},
              {C(3), C(-1), C(0), C(0)}};
    t.rules = {{2, 2, 3}, {3, 2, 2}};
    return t;
  }
  if (label == "S4") {
    t.classes = {{1, 1}, {2, 3}, {2, 6}, {3, 8}, {4, 6}};
    t.rows = {{C(1), C(1), C(1), C(1), C(1)},
              {C(1), C(1), C(-1), C(1), C(-1)},
              {C(2), C(2), C(0), C(-1), C(0)},
              {C(3), C(-1), C(1), C(0), C(-1)},
              {C(3), C(-1), C(-1), C(0), C(1)}};
    t.rules = {{4, 2, 1}};
    return t;
  }
  if (label == "Z7:Z3") {
    t.classes = {{1, 1}, {7, 3}, {7, 3}, {3, 7}, {3, 7}};
    t.rows = {{C(1), C(1), C(1), C(1), C(1)},
              {C(1), C(1), C(1), om, om2},
              {C(1), C(1), C(1), om2, om},
              {C(3), e, eb, C(0), C(0)},
              {C(3), eb, e, C(0), C(0)}};
    t.rules = {{1, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 2, 4}, {4, 2, 3}};
    return t;
  }
  if (label == "2.S3") {
    t.classes = {{1, 1}, {2, 1}, {6, 2}, {3, 2}, {4, 3}, {4, 3}};
    t.rows = {{C(1), C(1), C(1), C(1), C(1), C(1)},
              {C(1), C(1), C(1), C(1), C(-1), C(-1)},
              {C(1), C(-1), C(-1), C(1), ii, -ii},
              {C(1), C(-1), C(-1), C(1), -ii, ii},
              {C(2), C(-2), C(1), C(-1), C(0), C(0)},
              {C(2), C(2), C(-1), C(-1), C(0), C(0)}};
    t.rules = {{2, 2, 3}, {2, 3, 1}, {4, 2, 1}, {5, 2, 1}};
    return t;
  }
  if (label == "2.D4") {
    t.classes = {{1, 1}, {2, 1}, {4, 2}, {8, 2}, {8, 2}, {4, 4}, {4, 4}};
    t.rows = {{C(1), C(1), C(1), C(1), C(1), C(1), C(1)},
              {C(1), C(1), C(1), C(1), C(1), C(-1), C(-1)},
              {C(1), C(1), C(1), C(-1), C(-1), C(1), C(-1)},
              {C(1), C(1), C(1), C(-1), C(-1), C(-1), C(1)},
              {C(2), C(2), C(-2), C(0), C(0), C(0), C(0)},
              {C(2), C(-2), C(0), r2, -r2, C(0), C(0)},
              {C(2), C(-2), C(0), -r2, r2, C(0), C(0)}};
    t.rules = {{3, 3, 4}, {4, 3, 3}, {3, 2, 2}, {5, 2, 1}, {6, 2, 1}};
    return t;
  }
  if (label == "2.A4") {
    t.classes = {{1, 1}, {2, 1}, {4, 6}, {3, 4}, {3, 4}, {6, 4}, {6, 4}};
    t.rows = {{C(1), C(1), C(1), C(1), C(1), C(1), C(1)},
              {C(1), C(1), C(1), om, om2, om, om2},
              {C(1), C(1), C(1), om2, om, om2, om},
              {C(3), C(3), C(-1), C(0), C(0), C(0), C(0)},
              {C(2), C(-2), C(0), C(-1), C(-1), C(1), C(1)},
              {C(2), C(-2), C(0), -om, -om2, om, om2},
              {C(2), C(-2), C(0), -om2, -om, om2, om}};
    t.rules = {{3, 2, 4}, {4, 2, 3}, {5, 2, 4}, {6, 2, 3}, {5, 4, 3}, {6, 4, 4}, {2, 2, 1}};
    return t;
  }
  if (label == "2.S4") {
    t.classes = {{1, 1}, {2, 1}, {4, 6}, {8, 6}, {8, 6}, {3, 8}, {6, 8}, {4, 12}};
    t.rows = {{C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1)},
              {C(1), C(1), C(1), C(-1), C(-1), C(1), C(1), C(-1)},
              {C(2), C(2), C(2), C(0), C(0), C(-1), C(-1), C(0)},
              {C(3), C(3), C(-1), C(-1), C(-1), C(0), C(0), C(1)},
              {C(3), C(3), C(-1), C(1), C(1), C(0), C(0), C(-1)},
              {C(2), C(-2), C(0), r2, -r2, C(-1), C(1), C(0)},
              {C(2), C(-2), C(0), -r2, r2, C(-1), C(1), C(0)},
              {C(4), C(-4), C(0), C(0), C(0), C(1), C(-1), C(0)}};
    t.rules = {{3, 3, 4}, {4, 3, 3}, {3, 2, 2}, {6, 2, 5}, {6, 4, 5}, {2, 2, 1}, {7, 2, 1}};
    return t;
  }
  if (label == "2.(Z7:Z3)") {
    t.classes = {{1, 1}, {2, 1}, {7, 3}, {7, 3}, {14, 3}, {14, 3}, {3, 7}, {3, 7}, {6, 7}, {6, 7}};
    t.rows = {
        {C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1)},
        {C(1), C(-1), C(1), C(1), C(-1), C(-1), C(1), C(1), C(-1), C(-1)},
        {C(1), C(1), C(1), C(1), C(1), C(1), om, om2, om, om2},
        {C(1), C(-1), C(1), C(1), C(-1), C(-1), om, om2, -om, -om2},
        {C(1), C(1), C(1), C(1), C(1), C(1), om2, om, om2, om},
        {C(1), C(-1), C(1), C(1), C(-1), C(-1), om2, om, -om2, -om},
        {C(3), C(3), e, eb, e, eb, C(0), C(0), C(0), C(0)},
        {C(3), C(-3), e, eb, -e, -eb, C(0), C(0), C(0), C(0)},
        {C(3), C(3), eb, e, eb, e, C(0), C(0), C(0), C(0)},
        {C(3), C(-3), eb, e, -eb, -e, C(0), C(0), C(0), C(0)}};
    t.rules = {{2, 2, 2}, {2, 3, 3}, {3, 3, 2}, {4, 2, 2}, {5, 2, 3},
               {6, 2, 7}, {7, 2, 6}, {8, 2, 7}, {9, 2, 6}, {8, 4, 6}, {9, 4, 7}};
    return t;
  }
  return std::nullopt;
}

std::vector<std::string> dim_labels(const std::vector<ClassFunction>& rows) {
  std::vector<std::string> out;
  std::map<long, char> next;
  for (const auto& r : rows) {
    long d = dim_as_long(r.dimension());
    if (!next.count(d)) next[d] = 'a';
    out.push_back(std::to_string(d) + next[d]++);
  }
  return out;
}

CharacterTable cyclic_table(const FiniteMatrixGroup& g) {
  long n = g.order();
  if (g.class_count() != n) throw math_error("cyclic group with fused classes");
  long gen = -1;
  for (long i = 0; i < n && gen < 0; ++i)
    if (g.element_order(i) == n) gen = i;
  if (gen < 0) throw math_error("no generator in a cyclic group");
  std::vector<long> class_of_power(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) class_of_power[static_cast<size_t>(k)] = g.class_of(g.power(gen, k));
  std::vector<CycNum> zpow(static_cast<size_t>(n), CycNum(1));
  if (n > 1) {
    CycNum z = CycNum::zeta(n);
    for (long k = 1; k < n; ++k) zpow[static_cast<size_t>(k)] = mulc(zpow[static_cast<size_t>(k - 1)], z);
  }
  CharacterTable t;
  t.group = &g;
  for (long j = 0; j < n; ++j) {
    ClassFunction f;
    f.group = &g;
    f.values.assign(static_cast<size_t>(n), CycNum(0));
    for (long k = 0; k < n; ++k)
      f.values[static_cast<size_t>(class_of_power[static_cast<size_t>(k)])] =
          zpow[static_cast<size_t>((j * k) % n)];
    t.rows.push_back(std::move(f));
    t.labels.push_back("chi" + std::to_string(j));
  }
  t.complete = true;
  if (!rows_orthonormal(t.rows) || !table_complete_checks(g, t.rows))
    throw math_error("cyclic table fails the orthogonality relations");
  t.column_order.resize(static_cast<size_t>(n));
  std::iota(t.column_order.begin(), t.column_order.end(), 0);
  return t;
}

bool assignment_ok(const FiniteMatrixGroup& g, const CatEntry& e, const std::vector<long>& assign) {
  for (const auto& rule : e.rules) {
    long rep = g.classes()[static_cast<size_t>(assign[static_cast<size_t>(rule[0])])].representative;
    if (g.class_of(g.power(rep, rule[1])) != assign[static_cast<size_t>(rule[2])]) return false;
  }
  return true;
}

std::optional<CharacterTable> realize_catalog(const FiniteMatrixGroup& g, const CatEntry& e,
                                              const std::vector<long>& assign) {
  CharacterTable t;
  t.group = &g;
  for (const auto& row : e.rows) {
    ClassFunction f;
    f.group = &g;
    f.values.assign(static_cast<size_t>(g.class_count()), CycNum(0));
    for (size_t i = 0; i < row.size(); ++i) f.values[static_cast<size_t>(assign[i])] = row[i];
    t.rows.push_back(std::move(f));
  }
  if (!rows_orthonormal(t.rows) || !table_complete_checks(g, t.rows)) return std::nullopt;
  if (!g.projective() && !try_decompose(character_of(g), t)) return std::nullopt;
  t.labels = dim_labels(t.rows);
  t.complete = true;
  t.column_order.resize(static_cast<size_t>(g.class_count()));
  std::iota(t.column_order.begin(), t.column_order.end(), 0);
  std::sort(t.column_order.begin(), t.column_order.end(), [&](long a, long b) {
    const auto& ca = g.classes()[static_cast<size_t>(a)];
    const auto& cb = g.classes()[static_cast<size_t>(b)];
    return std::tuple(ca.element_order, ca.size, a) < std::tuple(cb.element_order, cb.size, b);
  });
  return t;
}

std::optional<CharacterTable> match_catalog(const FiniteMatrixGroup& g, const CatEntry& e,
                                            std::vector<long>& assign, std::vector<bool>& used,
                                            size_t idx) {
  if (idx == e.classes.size()) {
    if (!assignment_ok(g, e, assign)) return std::nullopt;
    return realize_catalog(g, e, assign);
  }
  for (long c = 0; c < g.class_count(); ++c) {
    if (used[static_cast<size_t>(c)]) continue;
    const auto& cls = g.classes()[static_cast<size_t>(c)];
    if (cls.element_order != e.classes[idx].first || cls.size != e.classes[idx].second) continue;
    used[static_cast<size_t>(c)] = true;
    assign[idx] = c;
    auto t = match_catalog(g, e, assign, used, idx + 1);
    used[static_cast<size_t>(c)] = false;
    if (t) return t;
  }
  return std::nullopt;
}

}  // namespace

CharacterTable catalog_table(const FiniteMatrixGroup& sub) {
  bool cyclic = false;
  for (const auto& c : sub.classes())
    if (c.element_order == sub.order()) cyclic = true;
  if (cyclic) return cyclic_table(sub);
  std::string label = group_label(sub);
  auto entry = catalog_entry(label);
  if (!entry) throw math_error("no catalog character table for label " + label);
  if (static_cast<long>(entry->classes.size()) != sub.class_count())
    throw math_error("catalog class count mismatch for " + label);
  std::vector<long> assign(entry->classes.size(), -1);
  std::vector<bool> used(static_cast<size_t>(sub.class_count()), false);
  auto t = match_catalog(sub, *entry, assign, used, 0);
  if (!t) throw math_error("catalog table for " + label + " does not match the subgroup classes");
  return *t;
}

RestrictionSummary restrict_and_decompose(const ClassFunction& chi, const FiniteMatrixGroup& parent,
                                          const SubgroupHandle& h) {
  if (chi.group != &parent) throw math_error("class function does not live on the parent group");
  FiniteMatrixGroup sub = subgroup_as_group(parent, h);
  FusionMap f = fusion_map(parent, sub);
  ClassFunction r = restrict_cf(chi, sub, f);
  CharacterTable t = catalog_table(sub);
  RestrictionSummary s;
  s.labels = t.labels;
  for (const auto& row : t.rows) s.dims.push_back(dim_as_long(row.dimension()));
  s.multiplicities = decompose(r, t);
  s.norm = inner(r, r);
  return s;
}

}  // namespace klein
