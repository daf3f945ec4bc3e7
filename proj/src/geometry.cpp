#include "klein168/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "klein168/poly.hpp"

namespace klein {

namespace {

long lcm_of(long a, long b) { return std::lcm(a, b); }

long common_conductor(const std::vector<CycNum>& v, long seed = 1) {
  long n = seed;
  for (const auto& c : v) n = lcm_of(n, c.conductor());
  return n;
}

Subspace full_space(long ambient, long conductor) {
  std::vector<std::vector<CycNum>> rows(static_cast<size_t>(ambient));
  for (long i = 0; i < ambient; ++i) {
    rows[static_cast<size_t>(i)].assign(static_cast<size_t>(ambient), CycNum(0).embed(conductor));
    rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = CycNum(1).embed(conductor);
  }
  return Subspace::from_vectors(ambient, std::move(rows));
}

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ProjPoint::ProjPoint(std::vector<CycNum> coords) {
  if (coords.empty()) throw math_error("projective point needs coordinates");
  long n = common_conductor(coords);
  for (auto& c : coords) c = c.embed(n);
  long lead = -1;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) {
      lead = static_cast<long>(i);
      break;
    }
  }
  if (lead < 0) throw math_error("zero vector does not define a projective point");
  CycNum scale = coords[static_cast<size_t>(lead)].inverse();
  coords_.reserve(coords.size());
  for (auto& c : coords) coords_.push_back((c * scale).minimized());
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) key_ += ", ";
    key_ += coords_[i].str();
  }
}

bool ProjPoint::operator==(const ProjPoint& o) const {
  if (coords_.size() != o.coords_.size()) return false;
  return key_ == o.key_;
}

std::string ProjPoint::str() const { return key_; }

ProjPoint ProjPoint::parse(const std::string& line) {
  std::vector<CycNum> coords;
  std::string cur;
  int depth = 0;
  for (char ch : line) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      coords.push_back(CycNum::parse(trimmed(cur)));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trimmed(cur).empty()) coords.push_back(CycNum::parse(trimmed(cur)));
  if (coords.empty()) throw parse_error("empty projective point line");
  return ProjPoint(std::move(coords));
}

ProjPoint point_act(const CycMatrix& m, const ProjPoint& p) {
  if (m.rows() != m.cols() || m.rows() != p.ambient_vars())
    throw math_error("matrix size does not match the point's ambient space");
  long n = lcm_of(common_conductor(p.coords()), m.conductor());
  CycMatrix mm = m.embed(n);
  std::vector<CycNum> in;
  in.reserve(p.coords().size());
  for (const auto& c : p.coords()) in.push_back(c.embed(n));
  std::vector<CycNum> out(static_cast<size_t>(m.cols()), CycNum(0).embed(n));
  for (long j = 0; j < m.cols(); ++j) {
    CycNum acc = CycNum(0).embed(n);
    for (long i = 0; i < m.rows(); ++i) acc = acc + in[static_cast<size_t>(i)] * mm.at(i, j);
    out[static_cast<size_t>(j)] = acc;
  }
  return ProjPoint(std::move(out));
}

OrbitRecord orbit(const FiniteMatrixGroup& g, const ProjPoint& p) {
  if (g.dimension() != p.ambient_vars())
    throw math_error("group dimension does not match the point's ambient space");
  std::map<std::string, ProjPoint> pts;
  std::vector<long> stab;
  for (long id = 0; id < g.order(); ++id) {
    ProjPoint q = point_act(g.element(id), p);
    if (q == p) stab.push_back(id);
    pts.emplace(q.key(), q);
  }
  if (static_cast<long>(pts.size()) * static_cast<long>(stab.size()) != g.order())
    throw math_error("orbit-stabilizer identity failed");
  OrbitRecord rec;
  rec.points.reserve(pts.size());
  for (auto& kv : pts) rec.points.push_back(kv.second);
  rec.stabilizer_order = static_cast<long>(stab.size());
  rec.stabilizer_label = iso_label(g, stab);
  return rec;
}

FixedLocus fixed_points(const CycMatrix& m) {
  return common_fixed_points(std::vector<CycMatrix>{m});
}

FixedLocus common_fixed_points(const std::vector<CycMatrix>& gens) {
  if (gens.empty()) throw math_error("common fixed locus needs at least one matrix");
  long ambient = gens[0].rows();
  std::vector<long> orders;
  long n = 1;
  for (const auto& g : gens) {
    if (g.rows() != ambient || g.cols() != ambient)
      throw math_error("fixed-point matrices must be square of equal size");
    long o = g.multiplicative_order();
    orders.push_back(o);
    n = lcm_of(n, lcm_of(g.conductor(), o));
  }
  std::vector<Subspace> loci{full_space(ambient, n)};
  for (size_t k = 0; k < gens.size(); ++k) {
    CycMatrix mt = gens[k].transpose().embed(n);
    std::vector<Subspace> next;
    for (const auto& lam : root_of_unity_candidates(orders[k])) {
      Subspace eig = mt.eigenspace(lam.embed(n));
      if (eig.dim() == 0) continue;
      for (const auto& locus : loci) {
        Subspace cut = locus.intersect(eig);
        if (cut.dim() >= 1) next.push_back(std::move(cut));
      }
    }
    loci = std::move(next);
  }
  FixedLocus out;
  for (const auto& locus : loci) {
    if (locus.dim() == 1)
      out.isolated.emplace_back(locus.basis()[0]);
    else
      out.components.push_back(locus);
  }
  std::sort(out.isolated.begin(), out.isolated.end(),
            [](const ProjPoint& a, const ProjPoint& b) { return a.key() < b.key(); });
  return out;
}

FixedLocus fixed_points(const FiniteMatrixGroup& parent, const SubgroupHandle& h) {
  if (parent.projective())
    throw math_error("fixed points need a linear matrix group; pass the cover");
  std::vector<long> ids = h.generators.empty() ? h.members : h.generators;
  if (ids.empty()) throw math_error("empty subgroup handle");
  std::vector<CycMatrix> mats;
  mats.reserve(ids.size());
  for (long id : ids) mats.push_back(parent.element(id));
  return common_fixed_points(mats);
}

std::vector<OrbitRecord> special_orbits_p3(const FiniteMatrixGroup& cover,
                                           const FiniteMatrixGroup& psl) {
  if (cover.projective() || cover.order() != 336 || cover.dimension() != 4)
    throw math_error("special orbit census needs the order-336 linear cover");
  if (!psl.projective() || psl.order() != 168 || psl.dimension() != 4)
    throw math_error("special orbit census needs the order-168 projective quotient");
  std::vector<long> proj = projection_map(cover, psl);

  // An orbit of size <= 41 has a stabilizer of order >= 5, hence one of the
  // subgroup orders below (a stabilizer equal to the whole group would show
  // up through its order-21 subgroups). Every common fixed point of each
  // representative is collected; conjugate subgroups contribute conjugate
  // points, so representatives reach every small orbit.
  std::map<std::string, ProjPoint> candidates;
  for (long o : {6L, 7L, 8L, 12L, 21L, 24L}) {
    SubgroupSearch found = subgroups_of_order(psl, o);
    for (const auto& rep : found.representatives) {
      PreimageResult pre = preimage_in_cover(cover, psl, proj, rep);
      FixedLocus locus = fixed_points(cover, pre.full);
      if (!locus.components.empty())
        throw math_error("positive-dimensional fixed locus in the small-orbit census");
      for (const auto& p : locus.isolated) candidates.emplace(p.key(), p);
    }
  }

  std::set<std::string> covered;
  std::vector<OrbitRecord> records;
  for (const auto& kv : candidates) {
    if (covered.count(kv.first)) continue;
    OrbitRecord rec = orbit(psl, kv.second);
    for (const auto& p : rec.points) covered.insert(p.key());
    records.push_back(std::move(rec));
  }

  std::vector<OrbitRecord*> size8, size24, size28;
  for (auto& rec : records) {
    if (rec.size() == 8)
      size8.push_back(&rec);
    else if (rec.size() == 24)
      size24.push_back(&rec);
    else if (rec.size() == 28)
      size28.push_back(&rec);
    else
      throw math_error("small-orbit census found an orbit of unexpected size " +
                       std::to_string(rec.size()));
  }
  if (size8.size() != 1 || size24.size() != 1 || size28.size() != 2)
    throw math_error("small-orbit census does not close up into sizes {8,24,28,28}");
  std::sort(size28.begin(), size28.end(), [](const OrbitRecord* a, const OrbitRecord* b) {
    return a->points[0].key() < b->points[0].key();
  });
  size8[0]->label = "Sigma8";
  size24[0]->label = "Sigma24";
  size28[0]->label = "Sigma28";
  size28[1]->label = "Sigma28p";
  return {*size8[0], *size24[0], *size28[0], *size28[1]};
}

OrbitRecord min_orbit_p2(const FiniteMatrixGroup& plane) {
  if (plane.projective() || plane.dimension() != 3)
    throw math_error("plane orbit sweep needs a linear three-dimensional group");
  // Any point with a nontrivial stabilizer is fixed by a prime-order element,
  // and inspection of the eigenvalue patterns shows the realizing point of
  // every stabilizer of order >= 3 appears among the isolated fixed points of
  // the prime-order class representatives (conjugation preserves orbit sizes).
  bool have = false;
  OrbitRecord best;
  for (const auto& cls : plane.classes()) {
    long eo = cls.element_order;
    if (eo != 2 && eo != 3 && eo != 7) continue;
    FixedLocus locus = fixed_points(plane.element(cls.representative));
    for (const auto& p : locus.isolated) {
      OrbitRecord rec = orbit(plane, p);
      if (!have || rec.size() < best.size() ||
          (rec.size() == best.size() && rec.points[0].key() < best.points[0].key())) {
        best = std::move(rec);
        have = true;
      }
    }
  }
  if (!have) throw math_error("plane orbit sweep found no fixed points");
  best.label = "min_p2";
  return best;
}

long min_orbit_size_p2(const FiniteMatrixGroup& plane) { return min_orbit_p2(plane).size(); }

long conditions_rank(const std::vector<ProjPoint>& points, long d) {
  if (points.empty()) throw math_error("conditions rank needs at least one point");
  if (d < 1) throw math_error("conditions rank needs degree >= 1");
  long nvars = points[0].ambient_vars();
  std::set<std::string> keys;
  for (const auto& p : points) {
    if (p.ambient_vars() != nvars) throw math_error("points live in different ambient spaces");
    keys.insert(p.key());
  }
  if (static_cast<long>(keys.size()) != static_cast<long>(points.size()))
    throw math_error("conditions rank needs pairwise distinct points");

  auto mons = monomials_of_degree(static_cast<int>(nvars), static_cast<int>(d));
  std::vector<std::vector<CycNum>> rows(points.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < static_cast<long>(points.size()); ++i) {
    const auto& coords = points[static_cast<size_t>(i)].coords();
    long n = common_conductor(coords);
    std::vector<std::vector<CycNum>> pw(static_cast<size_t>(nvars));
    for (long v = 0; v < nvars; ++v) {
      auto& tab = pw[static_cast<size_t>(v)];
      tab.push_back(CycNum(1).embed(n));
      CycNum base = coords[static_cast<size_t>(v)].embed(n);
      for (long e = 1; e <= d; ++e) tab.push_back(tab.back() * base);
    }
    std::vector<CycNum> row;
    row.reserve(mons.size());
    for (const auto& mon : mons) {
      CycNum val = CycNum(1).embed(n);
      for (long v = 0; v < nvars; ++v)
        if (mon[static_cast<size_t>(v)] > 0)
          val = val * pw[static_cast<size_t>(v)][static_cast<size_t>(mon[static_cast<size_t>(v)])];
      row.push_back(val.minimized());
    }
    rows[static_cast<size_t>(i)] = std::move(row);
  }

  long n = 1;
  for (const auto& row : rows) n = lcm_of(n, common_conductor(row));
  for (auto& row : rows)
    for (auto& v : row) v = v.embed(n);
  return static_cast<long>(rref_rows(rows).size());
}

std::vector<ProjPoint> load_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open point file: " + path);
  std::vector<ProjPoint> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(ProjPoint::parse(t));
  }
  if (out.empty()) throw parse_error("point file has no points: " + path);
  return out;
}

void write_point_file(const std::string& path, const std::string& comment,
                      const std::vector<ProjPoint>& points) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write point file: " + path);
  if (!comment.empty()) out << "# " << comment << "\n";
  for (const auto& p : points) out << p.str() << "\n";
}

}  // namespace klein
