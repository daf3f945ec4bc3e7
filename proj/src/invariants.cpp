#include "klein168/invariants.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "klein168/characters.hpp"

namespace klein {

namespace {

CycNum cyc(long v) { return CycNum(v); }

long to_nonneg_integer(const CycNum& v, const std::string& what) {
  CycNum m = v.minimized();
  if (m.conductor() != 1) throw math_error(what + ": value is not rational");
  Rational q = m.to_rational();
  if (q.get_den() != 1 || q < 0) throw math_error(what + ": value is not a non-negative integer");
  return static_cast<long>(q.get_num().get_si());
}

void require(bool ok, const std::string& message) {
  if (!ok) throw math_error(message);
}

bool integer_coefficients(const SparsePoly& f) {
  for (const auto& [e, c] : f.terms()) {
    CycNum m = c.minimized();
    if (m.conductor() != 1) return false;
    if (m.to_rational().get_den() != 1) return false;
  }
  return true;
}

// Right cosets of a maximal-order diagonal cyclic subgroup. Averaging a
// monomial over the diagonal subgroup either keeps it or kills it, so only
// the coset representatives need dense substitutions.
struct DiagPlan {
  std::vector<CycNum> diag;      // diagonal of the chosen generator
  long sub_order = 1;
  std::vector<long> coset_reps;  // element ids, one per right coset
};

DiagPlan diagonal_coset_plan(const FiniteMatrixGroup& g) {
  DiagPlan plan;
  long dim = g.dimension();
  long best = -1, best_ord = 1;
  for (long i = 0; i < g.order(); ++i) {
    const CycMatrix& m = g.element(i);
    bool is_diag = true;
    for (long r = 0; r < dim && is_diag; ++r)
      for (long c = 0; c < dim && is_diag; ++c)
        if (r != c && !m.at(r, c).is_zero()) is_diag = false;
    if (!is_diag) continue;
    long o = g.element_order(i);
    if (o > best_ord) {
      best_ord = o;
      best = i;
    }
  }
  if (best < 0) {
    plan.diag.assign(static_cast<size_t>(dim), CycNum(1));
    plan.coset_reps.resize(static_cast<size_t>(g.order()));
    for (long i = 0; i < g.order(); ++i) plan.coset_reps[static_cast<size_t>(i)] = i;
    return plan;
  }
  const CycMatrix& d0 = g.element(best);
  for (long j = 0; j < dim; ++j) plan.diag.push_back(d0.at(j, j));
  plan.sub_order = best_ord;
  std::vector<long> sub;
  sub.reserve(static_cast<size_t>(best_ord));
  for (long k = 0; k < best_ord; ++k) sub.push_back(g.power(best, k));
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  for (long t = 0; t < g.order(); ++t) {
    if (seen[static_cast<size_t>(t)]) continue;
    plan.coset_reps.push_back(t);
    for (long s : sub) seen[static_cast<size_t>(g.mul(s, t))] = 1;
  }
  return plan;
}

// Terms whose monomial the diagonal generator rescales by exactly 1; the
// cyclic average annihilates every other term.
SparsePoly diagonal_average(const DiagPlan& plan, const SparsePoly& f) {
  if (plan.sub_order == 1) return f;
  int n = f.nvars();
  std::vector<std::vector<CycNum>> pw(static_cast<size_t>(n), {CycNum(1)});
  auto dpow = [&](int j, int k) -> const CycNum& {
    auto& v = pw[static_cast<size_t>(j)];
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * plan.diag[static_cast<size_t>(j)]);
    return v[static_cast<size_t>(k)];
  };
  CycNum one(1);
  SparsePoly out(n);
  for (const auto& [e, c] : f.terms()) {
    CycNum scale = one;
    for (int j = 0; j < n; ++j)
      if (e[static_cast<size_t>(j)] > 0) scale = scale * dpow(j, e[static_cast<size_t>(j)]);
    if (scale == one) out.add_term(e, c);
  }
  return out;
}

// One coset representative's substitution x -> x * M^{-1}, with the powers of
// each substituted linear form cached across calls.
struct RepSubst {
  int n = 0;
  std::vector<SparsePoly> lin;
  std::vector<std::vector<SparsePoly>> pw;

  RepSubst(const CycMatrix& m, int nvars) : n(nvars) {
    CycMatrix inv = m.inverse();
    lin.reserve(static_cast<size_t>(n));
    pw.resize(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) {
      SparsePoly form(n);
      for (long i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        form.add_term(std::move(e), inv.at(i, j));
      }
      lin.push_back(std::move(form));
      pw[static_cast<size_t>(j)].push_back(SparsePoly::constant(n, CycNum(1)));
    }
  }

  const SparsePoly& power(int var, int k) {
    auto& v = pw[static_cast<size_t>(var)];
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * lin[static_cast<size_t>(var)]);
    return v[static_cast<size_t>(k)];
  }

  SparsePoly apply(const SparsePoly& f) {
    SparsePoly out(n);
    for (const auto& [e, c] : f.terms()) {
      SparsePoly t = SparsePoly::constant(n, c);
      for (int i = 0; i < n; ++i)
        if (e[static_cast<size_t>(i)] > 0) t = t * power(i, e[static_cast<size_t>(i)]);
      out = out + t;
    }
    return out;
  }
};

void check_linear_action(const FiniteMatrixGroup& g, int nvars, const std::string& what) {
  if (g.projective()) throw math_error(what + ": projective group has no linear action on forms");
  if (g.order() <= 0) throw math_error(what + ": empty group");
  if (g.dimension() != nvars) throw math_error(what + ": matrix size does not match variable count");
}

long reynolds_rank(const FiniteMatrixGroup& g, long d) {
  int n = static_cast<int>(g.dimension());
  DiagPlan plan = diagonal_coset_plan(g);
  auto mons = monomials_of_degree(n, static_cast<int>(d));
  std::map<std::vector<int>, long> column;
  for (size_t i = 0; i < mons.size(); ++i) column[mons[i]] = static_cast<long>(i);

  std::vector<std::vector<int>> survivors;
  for (const auto& e : mons) {
    SparsePoly m = SparsePoly::monomial(n, e, CycNum(1));
    if (!diagonal_average(plan, m).is_zero()) survivors.push_back(e);
  }
  if (survivors.empty()) return 0;

  std::vector<RepSubst> reps;
  reps.reserve(plan.coset_reps.size());
  for (long id : plan.coset_reps) reps.emplace_back(g.element(id), n);

  // images[r][s]: act of coset rep r on survivor s, filled in parallel and
  // folded in fixed order below.
  std::vector<std::vector<SparsePoly>> images(reps.size());
  long rep_count = static_cast<long>(reps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long r = 0; r < rep_count; ++r) {
    auto& out = images[static_cast<size_t>(r)];
    out.reserve(survivors.size());
    for (const auto& e : survivors)
      out.push_back(reps[static_cast<size_t>(r)].apply(SparsePoly::monomial(n, e, CycNum(1))));
  }

  std::vector<std::vector<CycNum>> rows;
  for (size_t s = 0; s < survivors.size(); ++s) {
    SparsePoly sum(n);
    for (size_t r = 0; r < reps.size(); ++r) sum = sum + images[r][s];
    if (sum.is_zero()) continue;
    std::vector<CycNum> row(mons.size(), CycNum(0));
    for (const auto& [e, c] : sum.terms()) row[static_cast<size_t>(column.at(e))] = c;
    rows.push_back(std::move(row));
  }
  return static_cast<long>(rref_rows(rows).size());
}

std::string poly_file_name(const std::string& dir, const std::string& name) {
  return dir + "/" + name + ".poly";
}

}  // namespace

std::vector<CycMatrix> space_generators() {
  CycNum z = CycNum::zeta(7);
  CycMatrix dg = CycMatrix::diagonal({CycNum(1), z, z.galois(4), z.galois(2)});
  auto pair_sum = [&](int a, int b) { return z.galois(a) + z.galois(b); };
  CycMatrix m({{CycNum(1), CycNum(2), CycNum(2), CycNum(2)},
               {CycNum(1), pair_sum(1, 6), pair_sum(2, 5), pair_sum(3, 4)},
               {CycNum(1), pair_sum(2, 5), pair_sum(3, 4), pair_sum(1, 6)},
               {CycNum(1), pair_sum(3, 4), pair_sum(1, 6), pair_sum(2, 5)}});
  return {dg, m * sqrt_minus_seven().inverse()};
}

std::vector<CycMatrix> plane_generators() {
  CycNum e = epsilon7(), eb = e.conj(), h = CycNum(make_rational(1, 2));
  CycMatrix a({{CycNum(-1), CycNum(0), CycNum(0)},
               {CycNum(0), CycNum(0), CycNum(-1)},
               {CycNum(0), CycNum(-1), CycNum(0)}});
  CycMatrix b({{CycNum(0), CycNum(0), CycNum(1)},
               {CycNum(1), CycNum(0), CycNum(0)},
               {CycNum(0), CycNum(1), CycNum(0)}});
  CycMatrix c({{CycNum(0), CycNum(1), CycNum(0)},
               {CycNum(1), CycNum(0), CycNum(0)},
               {CycNum(0), CycNum(0), CycNum(-1)}});
  CycMatrix d({{-h, h * e, -h}, {h, h * e, h}, {h * eb, CycNum(0), -h * eb}});
  return {a, b, c, d};
}

std::vector<CycMatrix> v22_stabilizer_generators() {
  CycNum z = CycNum::zeta(7);
  CycMatrix dg = CycMatrix::diagonal({z.galois(4), z, z.galois(2)});
  CycMatrix b({{CycNum(0), CycNum(0), CycNum(1)},
               {CycNum(1), CycNum(0), CycNum(0)},
               {CycNum(0), CycNum(1), CycNum(0)}});
  return {dg, b};
}

InvariantCatalog build_klein_invariants() {
  InvariantCatalog cat;
  auto quart = [](const std::string& s) { return SparsePoly::parse(4, s); };
  SparsePoly x1 = SparsePoly::variable(4, 0);
  auto xp = [&](long k) { return x1.pow(k); };

  cat.a = quart("x2*x3*x4");
  cat.b = quart("x2^3*x3 + x3^3*x4 + x4^3*x2");
  cat.c = quart("x2^2*x3^3 + x3^2*x4^3 + x4^2*x2^3");
  cat.d = cat.a * cat.a + quart("x2*x3^5 + x3*x4^5 + x4*x2^5");
  cat.e = cat.a * cat.b * cyc(7) + quart("x2^7 + x3^7 + x4^7");

  const SparsePoly &a = cat.a, &b = cat.b, &c = cat.c, &d = cat.d, &e = cat.e;
  cat.phi4 = xp(4) * cyc(2) + a * x1 * cyc(6) + b;
  cat.phi6 = xp(6) * cyc(8) - a * xp(3) * cyc(20) - b * xp(2) * cyc(10) - c * x1 * cyc(10) -
             a * a * cyc(14) - d;
  cat.phi8 = xp(8) - a * xp(5) * cyc(2) + b * xp(4) + c * xp(3) * cyc(2) +
             (a * a * cyc(6) + d) * xp(2) + a * b * x1 * cyc(2) + a * c;
  cat.phi8p = xp(8) + a * xp(5) * cyc(14) - b * xp(4) * cyc(7) + c * xp(3) * cyc(14) -
              d * xp(2) * cyc(7) + e * x1;
  cat.phi14 = xp(14) * cyc(48) + a * xp(11) * cyc(168) + b * xp(10) * cyc(308) -
              c * xp(9) * cyc(1596) + (a * a * cyc(42) + d * cyc(11)) * xp(8) * cyc(126) -
              (e * cyc(37) + a * b * cyc(490)) * xp(7) * cyc(8) +
              (a * c * cyc(12) + b * b * cyc(5)) * xp(6) * cyc(196) +
              (a * d * cyc(15) - b * c * cyc(13)) * xp(5) * cyc(196) +
              (c * c * cyc(182) - a * e * cyc(86) - b * d * cyc(7)) * xp(4) * cyc(14) +
              (b * e * cyc(11) - c * d * cyc(42)) * xp(3) * cyc(28) +
              (d * d * cyc(21) - c * e * cyc(16)) * xp(2) * cyc(14) + d * e * x1 * cyc(14) -
              e * e;

  cat.klein_v22 = SparsePoly::parse(3, "x1*x2^3 + x2*x3^3 + x3*x1^3");
  cat.klein_eps = SparsePoly::parse(3, "x1^4 + x2^4 + x3^4") +
                  SparsePoly::parse(3, "x1^2*x2^2 + x1^2*x3^2 + x2^2*x3^2") * (epsilon7() * cyc(3));
  cat.hessian_sextic = hessian(cat.klein_eps);

  struct Expect {
    const SparsePoly* f;
    const char* name;
    long degree;
  };
  const Expect shape[] = {{&cat.a, "a", 3},           {&cat.b, "b", 4},
                          {&cat.c, "c", 5},           {&cat.d, "d", 6},
                          {&cat.e, "e", 7},           {&cat.phi4, "phi4", 4},
                          {&cat.phi6, "phi6", 6},     {&cat.phi8, "phi8", 8},
                          {&cat.phi8p, "phi8p", 8},   {&cat.phi14, "phi14", 14},
                          {&cat.klein_v22, "klein_v22", 4}, {&cat.klein_eps, "klein_eps", 4},
                          {&cat.hessian_sextic, "hessian_sextic", 6}};
  for (const auto& s : shape) {
    require(s.f->degree() == s.degree, std::string("catalog entry ") + s.name + ": wrong degree");
    require(s.f->is_homogeneous(), std::string("catalog entry ") + s.name + ": not homogeneous");
  }
  for (const SparsePoly* f : {&cat.phi4, &cat.phi6, &cat.phi8, &cat.phi8p, &cat.phi14})
    require(integer_coefficients(*f), "quaternary invariant with non-integer coefficients");

  std::vector<CycMatrix> space = space_generators();
  std::vector<CycMatrix> plane = plane_generators();
  std::vector<CycMatrix> v22s = v22_stabilizer_generators();
  struct Guard {
    const SparsePoly* f;
    const char* name;
    const std::vector<CycMatrix>* gens;
  };
  const Guard guards[] = {{&cat.phi4, "phi4", &space},
                          {&cat.phi6, "phi6", &space},
                          {&cat.phi8, "phi8", &space},
                          {&cat.phi8p, "phi8p", &space},
                          {&cat.phi14, "phi14", &space},
                          {&cat.klein_eps, "klein_eps", &plane},
                          {&cat.hessian_sextic, "hessian_sextic", &plane},
                          {&cat.klein_v22, "klein_v22", &v22s}};
  for (const auto& g : guards)
    require(is_invariant(*g.f, *g.gens),
            std::string("catalog transcription failure: ") + g.name + " moved under its generators");
  return cat;
}

SparsePoly reynolds(const FiniteMatrixGroup& g, const SparsePoly& f) {
  check_linear_action(g, f.nvars(), "reynolds");
  int n = f.nvars();
  DiagPlan plan = diagonal_coset_plan(g);
  SparsePoly filtered = diagonal_average(plan, f);
  if (filtered.is_zero()) return SparsePoly(n);

  std::vector<RepSubst> reps;
  reps.reserve(plan.coset_reps.size());
  for (long id : plan.coset_reps) reps.emplace_back(g.element(id), n);
  std::vector<SparsePoly> parts(reps.size(), SparsePoly(n));
  long rep_count = static_cast<long>(reps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long r = 0; r < rep_count; ++r)
    parts[static_cast<size_t>(r)] = reps[static_cast<size_t>(r)].apply(filtered);

  SparsePoly sum(n);
  for (const SparsePoly& p : parts) sum = sum + p;
  return sum * CycNum(make_rational(plan.sub_order, g.order()));
}

SparsePoly reynolds_serial(const FiniteMatrixGroup& g, const SparsePoly& f) {
  check_linear_action(g, f.nvars(), "reynolds");
  SparsePoly sum(f.nvars());
  for (long i = 0; i < g.order(); ++i) sum = sum + act(g.element(i), f);
  return sum * CycNum(make_rational(1, g.order()));
}

long invariant_dim(const FiniteMatrixGroup& g, long d) {
  if (d < 1) throw math_error("invariant_dim needs degree >= 1");
  check_linear_action(g, static_cast<int>(g.dimension()), "invariant_dim");
  ClassFunction chi = character_of(g);
  ClassFunction sym = sym_power(chi, d);
  long by_character = to_nonneg_integer(inner(sym, trivial_character(g)), "invariant_dim");
  long by_rank = reynolds_rank(g, d);
  if (by_character != by_rank)
    throw math_error("invariant_dim: character recurrence gives " + std::to_string(by_character) +
                     " but the Reynolds rank is " + std::to_string(by_rank));
  return by_character;
}

std::vector<std::string> catalog_entry_names() {
  return {"a",    "b",     "c",    "d",     "e",         "phi4",      "phi6",
          "phi8", "phi8p", "phi14", "klein_v22", "klein_eps", "hessian_sextic"};
}

SparsePoly& catalog_entry(InvariantCatalog& cat, const std::string& name) {
  if (name == "a") return cat.a;
  if (name == "b") return cat.b;
  if (name == "c") return cat.c;
  if (name == "d") return cat.d;
  if (name == "e") return cat.e;
  if (name == "phi4") return cat.phi4;
  if (name == "phi6") return cat.phi6;
  if (name == "phi8") return cat.phi8;
  if (name == "phi8p") return cat.phi8p;
  if (name == "phi14") return cat.phi14;
  if (name == "klein_v22") return cat.klein_v22;
  if (name == "klein_eps") return cat.klein_eps;
  if (name == "hessian_sextic") return cat.hessian_sextic;
  throw math_error("unknown catalog entry: " + name);
}

const SparsePoly& catalog_entry(const InvariantCatalog& cat, const std::string& name) {
  return catalog_entry(const_cast<InvariantCatalog&>(cat), name);
}

void write_poly_file(const std::string& path, const std::string& comment, const SparsePoly& f) {
  std::ofstream out(path);
  if (!out) throw math_error("cannot write " + path);
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "vars " << f.nvars() << "\n";
  out << f.str() << "\n";
  if (!out) throw math_error("write failed for " + path);
}

SparsePoly load_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  int nvars = -1;
  std::string body, line;
  while (std::getline(in, line)) {
    std::string t = line;
    size_t first = t.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    t = t.substr(first);
    if (t[0] == '#') continue;
    if (t.rfind("vars", 0) == 0) {
      std::istringstream is(t.substr(4));
      if (!(is >> nvars) || nvars < 1) throw parse_error("bad vars line in " + path);
      continue;
    }
    if (!body.empty()) body += " ";
    body += t;
  }
  if (nvars < 0) throw parse_error("missing vars line in " + path);
  if (body.empty()) throw parse_error("missing polynomial in " + path);
  return SparsePoly::parse(nvars, body);
}

void emit_catalog(const InvariantCatalog& cat, const std::string& dir) {
  for (const std::string& name : catalog_entry_names())
    write_poly_file(poly_file_name(dir, name), "invariant catalog entry: " + name,
                    catalog_entry(cat, name));
}

InvariantCatalog load_catalog(const std::string& dir) {
  InvariantCatalog cat;
  for (const std::string& name : catalog_entry_names())
    catalog_entry(cat, name) = load_poly_file(poly_file_name(dir, name));
  const std::pair<const char*, long> degrees[] = {
      {"a", 3},    {"b", 4},     {"c", 5},     {"d", 6},         {"e", 7},
      {"phi4", 4}, {"phi6", 6},  {"phi8", 8},  {"phi8p", 8},     {"phi14", 14},
      {"klein_v22", 4}, {"klein_eps", 4}, {"hessian_sextic", 6}};
  for (const auto& [name, deg] : degrees)
    require(catalog_entry(cat, name).degree() == deg,
            std::string("loaded catalog entry ") + name + ": wrong degree");
  return cat;
}

}  // namespace klein
