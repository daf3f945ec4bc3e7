#include "klein168/groups.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace klein {

CycMatrix FiniteMatrixGroup::projective_canonical(const CycMatrix& m) {
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return m * m.at(i, j).inverse();
  throw math_error("zero matrix cannot be projectivized");
}

FiniteMatrixGroup FiniteMatrixGroup::generate(const std::vector<CycMatrix>& gens, long cap,
                                              bool projective) {
  if (gens.empty()) throw math_error("generate needs at least one generator");
  FiniteMatrixGroup g;
  g.dim_ = gens[0].rows();
  g.projective_ = projective;
  long t = 1;
  for (const auto& m : gens) {
    if (m.rows() != m.cols() || m.rows() != g.dim_) throw math_error("generators must be square of equal size");
    if (m.det().is_zero()) throw math_error("generator is singular");
    t = lcm_long(t, m.conductor());
  }
  g.conductor_ = t;
  std::vector<CycMatrix> gs;
  for (const auto& m : gens) {
    CycMatrix e = m.embed(t);
    gs.push_back(projective ? projective_canonical(e) : e);
  }

  auto push = [&](CycMatrix m, long parent, long gen_idx) -> long {
    std::string k = m.key();
    auto it = g.index_.find(k);
    if (it != g.index_.end()) return it->second;
    long id = static_cast<long>(g.elements_.size());
    if (id >= cap) throw math_error("group closure exceeded cap " + std::to_string(cap));
    g.index_.emplace(std::move(k), id);
    g.elements_.push_back(std::move(m));
    g.parent_.push_back(parent);
    g.parent_gen_.push_back(gen_idx);
    return id;
  };

  push(CycMatrix::identity(g.dim_).embed(t), -1, -1);
  // right_by_gen[s][x] = id of element(x) * gs[s]
  std::vector<std::vector<long>> right_by_gen(gs.size());
  for (size_t cur = 0; cur < g.elements_.size(); ++cur) {
    for (size_t s = 0; s < gs.size(); ++s) {
      CycMatrix prod = g.elements_[cur] * gs[s];
      if (projective) prod = projective_canonical(prod);
      long id = push(std::move(prod), static_cast<long>(cur), static_cast<long>(s));
      right_by_gen[s].push_back(id);
    }
  }
  for (const auto& m : gs) g.generator_ids_.push_back(g.index_.at(m.key()));

  long n = g.order();
  g.table_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (long a = 0; a < n; ++a) {
    g.table_[static_cast<size_t>(a) * n] = static_cast<int32_t>(a);
    for (long h = 1; h < n; ++h) {
      long via = g.table_[static_cast<size_t>(a) * n + g.parent_[static_cast<size_t>(h)]];
      g.table_[static_cast<size_t>(a) * n + h] =
          static_cast<int32_t>(right_by_gen[static_cast<size_t>(g.parent_gen_[static_cast<size_t>(h)])][static_cast<size_t>(via)]);
    }
  }
  g.build_tables_();
  g.build_classes_();
  return g;
}

void FiniteMatrixGroup::build_tables_() {
  long n = order();
  inverse_.assign(static_cast<size_t>(n), -1);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        inverse_[static_cast<size_t>(a)] = b;
        break;
      }
  order_.assign(static_cast<size_t>(n), 1);
  for (long a = 0; a < n; ++a) {
    long p = a, k = 1;
    while (p != 0) {
      p = mul(p, a);
      ++k;
    }
    order_[static_cast<size_t>(a)] = k;
  }
}

void FiniteMatrixGroup::build_classes_() {
  long n = order();
  class_of_.assign(static_cast<size_t>(n), -1);
  for (long go = 0; go < n; ++go) {
    if (class_of_[static_cast<size_t>(go)] >= 0) continue;
    long cid = static_cast<long>(classes_.size());
    std::set<long> members;
    for (long tt = 0; tt < n; ++tt) members.insert(mul(inv(tt), mul(go, tt)));
    ConjugacyClass cls;
    cls.representative = go;
    cls.members.assign(members.begin(), members.end());
    cls.size = static_cast<long>(cls.members.size());
    cls.element_order = element_order(go);
    for (long m : cls.members) class_of_[static_cast<size_t>(m)] = cid;
    classes_.push_back(std::move(cls));
  }
  long exp = exponent();
  for (auto& cls : classes_)
    for (long k = 1; k <= exp; ++k)
      if (exp % k == 0) cls.power_class[k] = class_of(power(cls.representative, k));
}

long FiniteMatrixGroup::checked_(long id) const {
  if (id < 0 || id >= order()) throw math_error("element id out of range");
  return id;
}

long FiniteMatrixGroup::mul(long a, long b) const {
  return table_[static_cast<size_t>(checked_(a)) * order() + checked_(b)];
}

long FiniteMatrixGroup::inv(long a) const { return inverse_[static_cast<size_t>(checked_(a))]; }

long FiniteMatrixGroup::power(long a, long k) const {
  checked_(a);
  if (k < 0) return power(inv(a), -k);
  long r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

long FiniteMatrixGroup::element_order(long id) const { return order_[static_cast<size_t>(checked_(id))]; }

long FiniteMatrixGroup::exponent() const {
  long e = 1;
  for (long o : order_) e = lcm_long(e, o);
  return e;
}

long FiniteMatrixGroup::scalar_count() const {
  long c = 0;
  for (const auto& m : elements_)
    if (m.is_scalar()) ++c;
  return c;
}

long FiniteMatrixGroup::id_of(const CycMatrix& m) const {
  CycMatrix e = m.conductor() == conductor_ ? m : m.embed(conductor_);
  if (projective_) e = projective_canonical(e);
  auto it = index_.find(e.key());
  return it == index_.end() ? -1 : it->second;
}

FiniteMatrixGroup FiniteMatrixGroup::projectivize(long cap) const {
  std::vector<CycMatrix> gens;
  for (long id : generator_ids_) gens.push_back(element(id));
  return generate(gens, cap, true);
}

FiniteMatrixGroup FiniteMatrixGroup::minimized_copy() const {
  FiniteMatrixGroup g = *this;
  long t = 1;
  std::vector<CycMatrix> mins;
  mins.reserve(elements_.size());
  for (const auto& m : elements_) {
    mins.push_back(m.minimized());
    t = lcm_long(t, mins.back().conductor());
  }
  g.conductor_ = t;
  g.index_.clear();
  for (size_t i = 0; i < mins.size(); ++i) {
    g.elements_[i] = mins[i].conductor() == t ? std::move(mins[i]) : mins[i].embed(t);
    g.index_.emplace(g.elements_[i].key(), static_cast<long>(i));
  }
  return g;
}

std::vector<long> span_in_group(const FiniteMatrixGroup& g, std::vector<long> seed, long cap) {
  std::vector<long> members{g.identity_id()};
  std::vector<char> in(static_cast<size_t>(g.order()), 0);
  in[static_cast<size_t>(g.identity_id())] = 1;
  for (long s : seed)
    if (!in[static_cast<size_t>(s)]) {
      in[static_cast<size_t>(s)] = 1;
      members.push_back(s);
    }
  // Every unordered pair {i, j} is handled once the later of the two indices
  // becomes the outer index, so elements appended mid-scan still meet all
  // earlier members.
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      for (long p : {g.mul(members[i], members[j]), g.mul(members[j], members[i])}) {
        if (!in[static_cast<size_t>(p)]) {
          in[static_cast<size_t>(p)] = 1;
          members.push_back(p);
          if (cap > 0 && static_cast<long>(members.size()) > cap) return {};
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

SubgroupSearch subgroups_of_order(const FiniteMatrixGroup& g, long m) {
  SubgroupSearch out;
  long n = g.order();
  if (m <= 0 || n % m != 0) return out;
  std::map<std::vector<long>, std::vector<long>> found;  // members -> generating pair
  for (long a = 0; a < n; ++a) {
    if (m % g.element_order(a) != 0) continue;
    for (long b = a; b < n; ++b) {
      if (m % g.element_order(b) != 0) continue;
      auto members = span_in_group(g, {a, b}, m);
      if (static_cast<long>(members.size()) != m) continue;
      auto it = found.find(members);
      if (it == found.end()) found.emplace(std::move(members), std::vector<long>{a, b});
    }
  }
  out.total_count = static_cast<long>(found.size());

  std::map<std::vector<long>, long> class_id;
  for (const auto& [members, gens] : found) {
    if (class_id.count(members)) continue;
    long cid = static_cast<long>(out.representatives.size());
    std::set<std::vector<long>> orbit;
    for (long t = 0; t < n; ++t) {
      std::vector<long> conj;
      conj.reserve(members.size());
      for (long s : members) conj.push_back(g.mul(g.inv(t), g.mul(s, t)));
      std::sort(conj.begin(), conj.end());
      orbit.insert(std::move(conj));
    }
    for (const auto& s : orbit) class_id[s] = cid;
    SubgroupHandle h;
    h.members = *orbit.begin();  // lexicographically least member list in the class
    auto git = found.find(h.members);
    h.generators = git != found.end() ? git->second : gens;
    h.iso_label = iso_label(g, h.members);
    out.representatives.push_back(std::move(h));
    out.class_sizes.push_back(static_cast<long>(orbit.size()));
  }
  return out;
}

std::set<long> transitive_orbit_sizes(const FiniteMatrixGroup& g, long bound) {
  std::set<long> out{1};
  long n = g.order();
  for (long m = 1; m < n; ++m) {
    if (n % m != 0) continue;
    long index = n / m;
    if (index > bound) continue;
    if (subgroups_of_order(g, m).total_count > 0) out.insert(index);
  }
  return out;
}

std::set<long> cyclic_orbit_sizes(const FiniteMatrixGroup& g) {
  std::set<long> out;
  for (long a = 0; a < g.order(); ++a) out.insert(g.order() / g.element_order(a));
  return out;
}

std::vector<long> projection_map(const FiniteMatrixGroup& cover, const FiniteMatrixGroup& image) {
  std::vector<long> proj(static_cast<size_t>(cover.order()), -1);
  for (long a = 0; a < cover.order(); ++a) {
    long id = image.id_of(cover.element(a));
    if (id < 0) throw math_error("cover element has no image in the projective group");
    proj[static_cast<size_t>(a)] = id;
  }
  return proj;
}

PreimageResult preimage_in_cover(const FiniteMatrixGroup& cover, const FiniteMatrixGroup& image,
                                 const std::vector<long>& proj, const SubgroupHandle& h) {
  std::vector<char> in_h(static_cast<size_t>(image.order()), 0);
  for (long s : h.members) in_h[static_cast<size_t>(s)] = 1;
  auto closed = span_in_group(image, h.members, static_cast<long>(h.members.size()));
  if (closed != h.members) throw math_error("handle is not a subgroup of the image");

  PreimageResult out;
  for (long a = 0; a < cover.order(); ++a)
    if (in_h[static_cast<size_t>(proj[static_cast<size_t>(a)])]) out.full.members.push_back(a);
  std::sort(out.full.members.begin(), out.full.members.end());
  out.full.iso_label = iso_label(cover, out.full.members);

  auto surjects = [&](const std::vector<long>& members) {
    std::set<long> img;
    for (long s : members) img.insert(proj[static_cast<size_t>(s)]);
    return static_cast<long>(img.size()) == static_cast<long>(h.members.size());
  };
  std::vector<long> best;
  std::vector<long> best_gens;
  std::vector<long> full_gens;
  const auto& pre = out.full.members;
  for (size_t i = 0; i < pre.size(); ++i)
    for (size_t j = i; j < pre.size(); ++j) {
      auto members = span_in_group(cover, {pre[i], pre[j]}, static_cast<long>(pre.size()));
      if (members.empty()) continue;
      if (full_gens.empty() && members.size() == pre.size()) full_gens = {pre[i], pre[j]};
      if (!surjects(members)) continue;
      if (best.empty() || members.size() < best.size() ||
          (members.size() == best.size() && members < best)) {
        best = members;
        best_gens = {pre[i], pre[j]};
      }
    }
  if (best.empty()) throw math_error("no subgroup of the cover surjects onto the handle");
  out.minimal.members = std::move(best);
  out.minimal.generators = std::move(best_gens);
  out.minimal.iso_label = iso_label(cover, out.minimal.members);
  out.full.generators = std::move(full_gens);
  return out;
}

GroupFingerprint fingerprint_of(const FiniteMatrixGroup& parent, const std::vector<long>& members) {
  GroupFingerprint f;
  f.order = static_cast<long>(members.size());
  std::vector<char> in(static_cast<size_t>(parent.order()), 0);
  for (long s : members) in[static_cast<size_t>(s)] = 1;
  for (long s : members) ++f.order_histogram[parent.element_order(s)];
  for (long z : members) {
    bool central = true;
    for (long s : members)
      if (parent.mul(z, s) != parent.mul(s, z)) {
        central = false;
        break;
      }
    if (central) ++f.center;
  }
  std::vector<long> comms;
  for (long a : members)
    for (long b : members) {
      long c = parent.mul(parent.mul(parent.inv(a), parent.inv(b)), parent.mul(a, b));
      comms.push_back(c);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  auto derived = span_in_group(parent, comms, static_cast<long>(members.size()));
  f.abelianization = f.order / static_cast<long>(derived.size());
  return f;
}

std::string label_for_fingerprint(const GroupFingerprint& f) {
  auto hist_is = [&](std::initializer_list<std::pair<long, long>> items) {
    std::map<long, long> m;
    for (auto [k, v] : items) m[k] = v;
    return f.order_histogram == m;
  };
  if (f.center == f.order) {  // abelian
    auto it = f.order_histogram.rbegin();
    if (it != f.order_histogram.rend() && it->first == f.order) return "Z" + std::to_string(f.order);
    if (f.order == 4 && hist_is({{1, 1}, {2, 3}})) return "Z2xZ2";
    return "other";
  }
  if (f.order == 6 && hist_is({{1, 1}, {2, 3}, {3, 2}}) && f.center == 1) return "S3";
  if (f.order == 8 && hist_is({{1, 1}, {2, 5}, {4, 2}}) && f.center == 2) return "D4";
  if (f.order == 12 && hist_is({{1, 1}, {2, 3}, {3, 8}}) && f.center == 1) return "A4";
  if (f.order == 24 && hist_is({{1, 1}, {2, 9}, {3, 8}, {4, 6}}) && f.center == 1) return "S4";
  if (f.order == 21 && hist_is({{1, 1}, {3, 14}, {7, 6}}) && f.center == 1) return "Z7:Z3";
  if (f.order == 12 && hist_is({{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}) && f.center == 2) return "2.S3";
  if (f.order == 16 && hist_is({{1, 1}, {2, 1}, {4, 10}, {8, 4}}) && f.center == 2) return "2.D4";
  if (f.order == 24 && hist_is({{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}) && f.center == 2) return "2.A4";
  if (f.order == 48 && hist_is({{1, 1}, {2, 1}, {3, 8}, {4, 18}, {6, 8}, {8, 12}}) && f.center == 2)
    return "2.S4";
  if (f.order == 42 && hist_is({{1, 1}, {2, 1}, {3, 14}, {6, 14}, {7, 6}, {14, 6}}) && f.center == 2)
    return "2.(Z7:Z3)";
  if (f.order == 168 && hist_is({{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}}) && f.center == 1)
    return "PSL(2,7)";
  if (f.order == 336 &&
      hist_is({{1, 1}, {2, 1}, {3, 56}, {4, 42}, {6, 56}, {7, 48}, {8, 84}, {14, 48}}) &&
      f.center == 2)
    return "SL(2,7)";
  return "other";
}

std::string iso_label(const FiniteMatrixGroup& parent, const std::vector<long>& members) {
  return label_for_fingerprint(fingerprint_of(parent, members));
}

namespace {

std::string trimmed(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

std::vector<CycMatrix> load_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open generator file: " + path);
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(std::move(line));
  }
  size_t pos = 0;
  long conductor = 1;
  if (pos < lines.size() && lines[pos].rfind("conductor", 0) == 0) {
    try {
      conductor = std::stol(trimmed(lines[pos].substr(9)));
    } catch (...) {
      throw parse_error("bad conductor line: " + lines[pos]);
    }
    ++pos;
  }
  std::vector<CycMatrix> out;
  while (pos < lines.size()) {
    std::istringstream hdr(lines[pos]);
    std::string kw;
    long r = 0, c = 0;
    hdr >> kw >> r >> c;
    if (kw != "matrix" || r <= 0 || c <= 0) throw parse_error("expected 'matrix R C' header, got: " + lines[pos]);
    ++pos;
    if (pos + static_cast<size_t>(r) > lines.size()) throw parse_error("truncated matrix block in " + path);
    std::vector<std::string> rows(lines.begin() + static_cast<long>(pos),
                                  lines.begin() + static_cast<long>(pos) + r);
    pos += static_cast<size_t>(r);
    CycMatrix m = CycMatrix::parse_rows(rows);
    if (m.cols() != c) throw parse_error("matrix block has wrong column count in " + path);
    out.push_back(m.embed(lcm_long(conductor, m.conductor())));
  }
  if (out.empty()) throw parse_error("no matrices in " + path);
  return out;
}

std::string data_file(const std::string& name) {
#ifdef KLEIN_DATA_DIR
  return std::string(KLEIN_DATA_DIR) + "/" + name;
#else
  return "data/" + name;
#endif
}

}  // namespace klein
