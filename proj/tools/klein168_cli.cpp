#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "klein168/apolarity.hpp"
#include "klein168/characters.hpp"
#include "klein168/checks.hpp"
#include "klein168/diophantine.hpp"
#include "klein168/geometry.hpp"
#include "klein168/groebner.hpp"
#include "klein168/invariants.hpp"

using nlohmann::json;

namespace {

struct CliState {
  bool json_out = false;
  long seed = 0;  // reserved for the randomized property suites; every
                  // subcommand here is deterministic and ignores it
  klein::CheckConfig cfg;
};

const klein::FiniteMatrixGroup& cover() {
  static klein::FiniteMatrixGroup g =
      klein::FiniteMatrixGroup::generate(klein::space_generators(), 400);
  return g;
}

const klein::FiniteMatrixGroup& quotient() {
  static klein::FiniteMatrixGroup g = cover().projectivize(200);
  return g;
}

const klein::FiniteMatrixGroup& plane() {
  static klein::FiniteMatrixGroup g =
      klein::FiniteMatrixGroup::generate(klein::plane_generators(), 200);
  return g;
}

const klein::CharacterTable& quotient_table() {
  static klein::CharacterTable t = klein::build_psl_table(plane());
  return t;
}

const klein::CharacterTable& cover_table() {
  static klein::CharacterTable t = klein::build_cover_table(cover(), quotient_table());
  return t;
}

const klein::InvariantCatalog& catalog() {
  static klein::InvariantCatalog c = klein::build_klein_invariants();
  return c;
}

void emit(const CliState& st, const json& payload, const std::string& text) {
  if (st.json_out)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

json group_json(const std::string& name, const klein::FiniteMatrixGroup& g) {
  json classes = json::array();
  for (const auto& c : g.classes())
    classes.push_back({{"size", c.size}, {"element_order", c.element_order}});
  return {{"name", name},
          {"order", g.order()},
          {"projective", g.projective()},
          {"dimension", g.dimension()},
          {"classes", classes}};
}

int cmd_group_info(const CliState& st) {
  json groups = json::array();
  groups.push_back(group_json("cover", cover()));
  groups.push_back(group_json("quotient", quotient()));
  groups.push_back(group_json("plane", plane()));
  std::ostringstream out;
  for (const auto& g : groups) {
    out << g["name"].get<std::string>() << ": order " << g["order"].get<long>()
        << (g["projective"].get<bool>() ? " (projective)" : " (linear)") << ", "
        << g["classes"].size() << " classes\n  class sizes:";
    for (const auto& c : g["classes"]) out << " " << c["size"].get<long>();
    out << "\n  element orders:";
    for (const auto& c : g["classes"]) out << " " << c["element_order"].get<long>();
    out << "\n";
  }
  emit(st, {{"groups", groups}}, out.str());
  return 0;
}

int cmd_char_table(const CliState& st, const std::string& which) {
  const klein::CharacterTable& t = which == "cover" ? cover_table() : quotient_table();
  const klein::FiniteMatrixGroup& g = *t.group;
  json columns = json::array();
  for (long c : t.column_order) {
    const auto& cl = g.classes()[static_cast<size_t>(c)];
    columns.push_back({{"size", cl.size}, {"element_order", cl.element_order}});
  }
  json rows = json::array();
  auto grid = t.grid();
  for (size_t i = 0; i < t.rows.size(); ++i) {
    json values = json::array();
    for (const auto& v : grid[i]) values.push_back(v.str());
    rows.push_back({{"label", t.labels[i]}, {"values", values}});
  }
  std::ostringstream out;
  out << "classes (size, element order):";
  for (const auto& c : columns)
    out << " (" << c["size"].get<long>() << "," << c["element_order"].get<long>() << ")";
  out << "\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    out << t.labels[i] << ":";
    for (const auto& v : grid[i]) out << "  " << v.str();
    out << "\n";
  }
  emit(st, {{"table", which}, {"columns", columns}, {"rows", rows}}, out.str());
  return 0;
}

// expression grammar: NAME | dual(NAME) | symK(NAME) | extK(NAME) | NAME*NAME
int cmd_decompose(const CliState& st, const std::string& raw) {
  std::string expr;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) expr += c;
  const klein::CharacterTable& t =
      expr.find('U') != std::string::npos ? cover_table() : quotient_table();
  std::set<std::string> labels(t.labels.begin(), t.labels.end());
  auto need_row = [&](const std::string& name) -> const klein::ClassFunction& {
    if (!labels.count(name)) throw klein::parse_error("unknown character label: " + name);
    return t.row(name);
  };

  klein::ClassFunction chi;
  size_t open = expr.find('(');
  size_t star = expr.find('*');
  if (open != std::string::npos) {
    if (expr.back() != ')') throw klein::parse_error("unbalanced parenthesis in: " + raw);
    std::string head = expr.substr(0, open);
    std::string arg = expr.substr(open + 1, expr.size() - open - 2);
    if (head == "dual") {
      chi = klein::dual(need_row(arg));
    } else if (head.rfind("sym", 0) == 0 || head.rfind("ext", 0) == 0) {
      long k = 0;
      try {
        k = std::stol(head.substr(3));
      } catch (const std::exception&) {
        throw klein::parse_error("bad power in: " + raw);
      }
      chi = head[0] == 's' ? klein::sym_power(need_row(arg), k)
                           : klein::ext_power(need_row(arg), k);
    } else {
      throw klein::parse_error("unknown operation: " + head);
    }
  } else if (star != std::string::npos) {
    chi = klein::tensor(need_row(expr.substr(0, star)), need_row(expr.substr(star + 1)));
  } else {
    chi = need_row(expr);
  }

  std::vector<long> mult = klein::decompose(chi, t);
  json parts = json::array();
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < mult.size(); ++i) {
    parts.push_back({{"label", t.labels[i]}, {"multiplicity", mult[i]}});
    if (mult[i] == 0) continue;
    if (!first) out << " + ";
    if (mult[i] > 1) out << mult[i] << "*";
    out << t.labels[i];
    first = false;
  }
  if (first) out << "0";
  out << "\n";
  emit(st, {{"expression", raw}, {"table", t.rows.size() == 8 ? "cover" : "quotient"},
            {"decomposition", parts}},
       out.str());
  return 0;
}

int cmd_invariants(const CliState& st, const std::string& emit_dir) {
  const klein::InvariantCatalog& c = catalog();
  if (!emit_dir.empty()) {
    klein::emit_catalog(c, emit_dir);
    emit(st, {{"emitted", emit_dir}, {"entries", klein::catalog_entry_names()}},
         "catalog written to " + emit_dir + "\n");
    return 0;
  }
  json entries = json::array();
  std::ostringstream out;
  for (const std::string& name : klein::catalog_entry_names()) {
    const klein::SparsePoly& f = klein::catalog_entry(c, name);
    entries.push_back({{"name", name},
                       {"variables", f.nvars()},
                       {"degree", f.degree()},
                       {"terms", static_cast<long>(f.terms().size())}});
    out << name << ": " << f.nvars() << " vars, degree " << f.degree() << ", "
        << f.terms().size() << " terms\n";
  }
  emit(st, {{"entries", entries}}, out.str());
  return 0;
}

int cmd_orbits(const CliState& st, const std::string& space, bool points) {
  json payload;
  std::ostringstream out;
  if (space == "p3") {
    std::vector<klein::OrbitRecord> recs = klein::special_orbits_p3(cover(), quotient());
    json arr = json::array();
    for (const auto& r : recs) {
      json rec = {{"label", r.label},
                  {"size", r.size()},
                  {"stabilizer_order", r.stabilizer_order},
                  {"stabilizer", r.stabilizer_label}};
      out << r.label << ": size " << r.size() << ", stabilizer " << r.stabilizer_label
          << " of order " << r.stabilizer_order << "\n";
      if (points) {
        json pts = json::array();
        for (const auto& p : r.points) {
          pts.push_back(p.str());
          out << "  " << p.str() << "\n";
        }
        rec["points"] = pts;
      }
      arr.push_back(rec);
    }
    payload = {{"space", "p3"}, {"orbits", arr}};
  } else {
    klein::OrbitRecord r = klein::min_orbit_p2(plane());
    out << "minimal orbit: size " << r.size() << ", stabilizer " << r.stabilizer_label
        << " of order " << r.stabilizer_order << "\n";
    json rec = {{"label", r.label},
                {"size", r.size()},
                {"stabilizer_order", r.stabilizer_order},
                {"stabilizer", r.stabilizer_label}};
    if (points) {
      json pts = json::array();
      for (const auto& p : r.points) {
        pts.push_back(p.str());
        out << "  " << p.str() << "\n";
      }
      rec["points"] = pts;
    }
    std::set<long> sizes = klein::transitive_orbit_sizes(quotient(), 41);
    out << "orbit sizes up to 41:";
    for (long s : sizes) out << " " << s;
    out << "\n";
    payload = {{"space", "p2"},
               {"minimal_orbit", rec},
               {"orbit_sizes_up_to_41", std::vector<long>(sizes.begin(), sizes.end())}};
  }
  emit(st, payload, out.str());
  return 0;
}

int cmd_conditions(const CliState& st, const std::string& orbit, long degree) {
  static const std::map<std::string, std::string> files = {
      {"sigma8", "orbits/sigma8.pts"},
      {"sigma24", "orbits/sigma24.pts"},
      {"sigma28", "orbits/sigma28.pts"},
      {"sigma28p", "orbits/sigma28p.pts"},
      {"min_p2", "orbits/min_p2.pts"}};
  auto it = files.find(orbit);
  if (it == files.end()) throw klein::parse_error("unknown orbit name: " + orbit);
  std::vector<klein::ProjPoint> pts = klein::load_point_file(klein::data_file(it->second));
  long nvars = pts.at(0).ambient_vars();
  long monomials = static_cast<long>(klein::monomials_of_degree(static_cast<int>(nvars),
                                                                static_cast<int>(degree))
                                         .size());
  long rank = klein::conditions_rank(pts, degree);
  std::ostringstream out;
  out << orbit << ": " << pts.size() << " points, degree " << degree << ", " << monomials
      << " monomials, rank " << rank << "\n";
  emit(st,
       {{"orbit", orbit},
        {"points", static_cast<long>(pts.size())},
        {"degree", degree},
        {"monomials", monomials},
        {"rank", rank}},
       out.str());
  return 0;
}

int cmd_rh(const CliState& st, long gmax) {
  std::vector<klein::BranchDatum> rows = klein::rh_enumerate(gmax);
  json arr = json::array();
  std::ostringstream out;
  out << "g0  g   a2 a3 a4 a7\n";
  for (const auto& r : rows) {
    arr.push_back({{"quotient_genus", r.quotient_genus},
                   {"genus", r.genus},
                   {"a2", r.a2},
                   {"a3", r.a3},
                   {"a4", r.a4},
                   {"a7", r.a7}});
    out << r.quotient_genus << "   " << r.genus << (r.genus < 10 ? "   " : "  ") << r.a2
        << "  " << r.a3 << "  " << r.a4 << "  " << r.a7 << "\n";
  }
  emit(st, {{"gmax", gmax}, {"rows", arr}}, out.str());
  return 0;
}

const klein::SparsePoly& named_form(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"f4", "phi4"}, {"f6", "phi6"}, {"f8", "phi8"}, {"f8p", "phi8p"}, {"f14", "phi14"}};
  auto it = aliases.find(name);
  const std::string& resolved = it == aliases.end() ? name : it->second;
  for (const std::string& known : klein::catalog_entry_names())
    if (known == resolved) return klein::catalog_entry(catalog(), resolved);
  throw klein::parse_error("unknown form name: " + name);
}

int cmd_ideal_dim(const CliState& st, const std::string& set_arg) {
  std::vector<klein::SparsePoly> gens;
  std::vector<std::string> names;
  std::stringstream ss(set_arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    names.push_back(item);
    gens.push_back(named_form(item));
  }
  if (gens.empty()) throw klein::parse_error("--set needs at least one form name");

  json per_prime = json::array();
  long dim = -2;
  bool agree = true;
  for (long p : st.cfg.primes) {
    auto start = std::chrono::steady_clock::now();
    std::vector<klein::PrimeFieldPoly> mod;
    for (const auto& g : gens) mod.push_back(klein::reduce_mod_p(g, p));
    klein::GroebnerBasis gb = klein::buchberger(mod);
    long affine = klein::affine_staircase_dimension(gb);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    per_prime.push_back({{"prime", p},
                         {"basis_size", static_cast<long>(gb.polys.size())},
                         {"affine_dimension", affine},
                         {"seconds", secs}});
    if (dim == -2)
      dim = affine;
    else
      agree = agree && dim == affine;
  }
  if (!agree) throw klein::math_error("staircase dimensions disagree across primes");
  long projective = dim - 1;
  std::ostringstream out;
  out << "ideal of {" << set_arg << "}: projective dimension " << projective << "\n";
  for (const auto& pp : per_prime)
    out << "  p = " << pp["prime"].get<long>() << ": basis " << pp["basis_size"].get<long>()
        << " polynomials\n";
  emit(st, {{"generators", names}, {"dimension", projective}, {"primes", per_prime}},
       out.str());
  return 0;
}

int cmd_smooth(const CliState& st, const std::string& name, const std::string& file) {
  klein::SparsePoly f(3);
  std::string label;
  if (!name.empty()) {
    f = named_form(name);
    label = name;
  } else if (!file.empty()) {
    f = klein::load_poly_file(file);
    label = file;
  } else {
    throw klein::parse_error("smooth needs --name or --poly");
  }
  bool smooth = klein::is_smooth_hypersurface(f, st.cfg.primes);
  emit(st, {{"form", label}, {"smooth", smooth}, {"primes", st.cfg.primes}},
       label + ": " + (smooth ? "smooth" : "singular (or certificate failed)") + "\n");
  return 0;
}

std::vector<klein::SparsePoly> load_lines_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw klein::parse_error("cannot open lines file: " + path);
  std::vector<klein::SparsePoly> lines;
  std::string text;
  while (std::getline(in, text)) {
    size_t hash = text.find('#');
    if (hash != std::string::npos) text = text.substr(0, hash);
    size_t a = text.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    lines.push_back(klein::SparsePoly::parse(3, text));
  }
  return lines;
}

std::vector<klein::SparsePoly> hexagon_case_lines(const std::string& name) {
  klein::SparsePoly x = klein::SparsePoly::variable(3, 0),
                    y = klein::SparsePoly::variable(3, 1),
                    z = klein::SparsePoly::variable(3, 2);
  if (name == "z4") {
    klein::CycNum i = klein::sqrt_minus_one();
    return {x - z * i, x + z * i, y + x * i, y - x * i, z + y * i, z - y * i};
  }
  if (name == "final") return {x - z, x + z, y - x, y + x, z - y, z + y};
  throw klein::parse_error("unknown hexagon case: " + name);
}

int cmd_hexagon(const CliState& st, const std::string& case_name, const std::string& lines_file,
                const std::string& quartic_file) {
  std::vector<klein::SparsePoly> lines;
  std::string source;
  if (!case_name.empty()) {
    lines = hexagon_case_lines(case_name);
    source = case_name;
  } else if (!lines_file.empty()) {
    lines = load_lines_file(lines_file);
    source = lines_file;
  } else {
    throw klein::parse_error("hexagon needs --case or --lines");
  }
  klein::SparsePoly f =
      quartic_file.empty() ? catalog().klein_eps : klein::load_poly_file(quartic_file);
  klein::SolveResult r = klein::powersum_solve(f, lines);
  bool solved = r.status == klein::SolveStatus::solved;
  json mults = json::array();
  for (const auto& m : r.multipliers) mults.push_back(m.str());
  std::ostringstream out;
  out << "hexagon " << source << ": " << (solved ? "solved" : "inconsistent") << " (rank "
      << r.rank_system << ", augmented " << r.rank_augmented << ")\n";
  if (solved) {
    out << "multipliers:";
    for (const auto& m : r.multipliers) out << " " << m.str();
    out << "\n";
  }
  emit(st,
       {{"lines", source},
        {"status", solved ? "solved" : "inconsistent"},
        {"rank_system", r.rank_system},
        {"rank_augmented", r.rank_augmented},
        {"multipliers", mults}},
       out.str());
  return 0;
}

int cmd_catalecticant(const CliState& st, const std::string& name, const std::string& file) {
  klein::SparsePoly f(3);
  std::string label;
  if (!name.empty()) {
    f = named_form(name);
    label = name;
  } else if (!file.empty()) {
    f = klein::load_poly_file(file);
    label = file;
  } else {
    throw klein::parse_error("catalecticant needs --name or --quartic");
  }
  klein::Catalecticant cat = klein::catalecticant(f);
  json rows = json::array();
  std::ostringstream out;
  out << "catalecticant of " << label << ":\n" << cat.matrix.str();
  for (long i = 0; i < cat.matrix.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < cat.matrix.cols(); ++j) row.push_back(cat.matrix.at(i, j).str());
    rows.push_back(row);
  }
  out << "determinant: " << cat.determinant.str() << "\nrank: " << cat.rank << "\n";
  emit(st,
       {{"form", label},
        {"matrix", rows},
        {"determinant", cat.determinant.str()},
        {"rank", cat.rank},
        {"degenerate", cat.determinant.is_zero()}},
       out.str());
  return 0;
}

int cmd_report(CliState& st, const std::string& only, const std::string& out_path) {
  if (!only.empty()) {
    st.cfg.selection.clear();
    std::stringstream ss(only);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) st.cfg.selection.push_back(item);
  }
  klein::ReportOutcome outcome = klein::run_report(st.cfg);
  std::string doc = klein::report_json(outcome);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path);
    if (!out) throw klein::parse_error("cannot write report to " + out_path);
    out << doc;
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact reconstruction toolkit for the order-168 collineation group"};
  app.require_subcommand(1);

  CliState st;
  std::string config_path;
  app.add_flag("--json", st.json_out, "machine-readable JSON output");
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--seed", st.seed, "seed for randomized property suites (ignored here)");

  app.add_subcommand("group-info", "orders and conjugacy classes of the three group models");

  std::string table_which = "quotient";
  CLI::App* tab = app.add_subcommand("char-table", "print a character table");
  tab->add_option("--which", table_which, "quotient | cover")
      ->check(CLI::IsMember({"quotient", "cover"}));

  std::string expr;
  CLI::App* dec = app.add_subcommand("decompose", "decompose a character expression");
  dec->add_option("expression", expr,
                  "label, label*label, dual(label), symK(label) or extK(label)")
      ->required();

  std::string emit_dir;
  CLI::App* inv = app.add_subcommand("invariants", "list or emit the invariant catalog");
  inv->add_option("--emit", emit_dir, "write every catalog entry to this directory");

  std::string space = "p3";
  bool with_points = false;
  CLI::App* orb = app.add_subcommand("orbits", "special orbit census");
  orb->add_option("--space", space, "p3 | p2")->check(CLI::IsMember({"p3", "p2"}));
  orb->add_flag("--points", with_points, "list every orbit point");

  std::string orbit_name;
  long degree = 4;
  CLI::App* con = app.add_subcommand("conditions", "rank of the conditions matrix of an orbit");
  con->add_option("--orbit", orbit_name, "sigma8 | sigma24 | sigma28 | sigma28p | min_p2")
      ->required();
  con->add_option("--degree", degree, "form degree (default 4)");

  long gmax = 0;
  CLI::App* rh = app.add_subcommand("rh", "branch data with genus at most gmax");
  rh->add_option("--gmax", gmax, "genus cap (default from config, 30)");

  std::string set_arg;
  CLI::App* idim = app.add_subcommand("ideal-dim", "projective dimension certificate");
  idim->add_option("--set", set_arg, "comma list of catalog forms, e.g. f4,f6,f8p")->required();

  std::string smooth_name, smooth_file;
  CLI::App* smo = app.add_subcommand("smooth", "hypersurface smoothness certificate");
  smo->add_option("--name", smooth_name, "catalog form name");
  smo->add_option("--poly", smooth_file, "polynomial file");

  std::string case_name, lines_file, quartic_file;
  CLI::App* hex = app.add_subcommand("hexagon", "solve a power-sum system for six lines");
  hex->add_option("--case", case_name, "z4 | final");
  hex->add_option("--lines", lines_file, "file with one linear form per line");
  hex->add_option("--quartic", quartic_file, "quartic file (default: the epsilon model)");

  std::string cat_name, cat_file;
  CLI::App* cat = app.add_subcommand("catalecticant", "middle catalecticant of a ternary quartic");
  cat->add_option("--name", cat_name, "catalog form name");
  cat->add_option("--quartic", cat_file, "quartic file");

  std::string only, out_path;
  CLI::App* rep = app.add_subcommand("report", "run the verification ledger");
  rep->add_option("--only", only, "comma list of check ids (default: all)");
  rep->add_option("--out", out_path, "write the JSON report to this file");

  for (CLI::App* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) st.cfg = klein::CheckConfig::from_file(config_path);
    if (gmax <= 0) gmax = st.cfg.rh_gmax;

    if (app.got_subcommand("group-info")) return cmd_group_info(st);
    if (app.got_subcommand(tab)) return cmd_char_table(st, table_which);
    if (app.got_subcommand(dec)) return cmd_decompose(st, expr);
    if (app.got_subcommand(inv)) return cmd_invariants(st, emit_dir);
    if (app.got_subcommand(orb)) return cmd_orbits(st, space, with_points);
    if (app.got_subcommand(con)) return cmd_conditions(st, orbit_name, degree);
    if (app.got_subcommand(rh)) return cmd_rh(st, gmax);
    if (app.got_subcommand(idim)) return cmd_ideal_dim(st, set_arg);
    if (app.got_subcommand(smo)) return cmd_smooth(st, smooth_name, smooth_file);
    if (app.got_subcommand(hex)) return cmd_hexagon(st, case_name, lines_file, quartic_file);
    if (app.got_subcommand(cat)) return cmd_catalecticant(st, cat_name, cat_file);
    if (app.got_subcommand(rep)) return cmd_report(st, only, out_path);
  } catch (const klein::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
