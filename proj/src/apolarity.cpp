#include "klein168/apolarity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace klein {

namespace {

void require_ternary_quartic(const SparsePoly& f, const char* who) {
  if (f.nvars() != 3) throw math_error(std::string(who) + ": expected 3 variables");
  if (f.is_zero()) return;
  if (!f.is_homogeneous() || f.degree() != 4)
    throw math_error(std::string(who) + ": expected a homogeneous quartic");
}

long exp_factorial(const std::vector<int>& e) {
  long out = 1;
  for (int k : e)
    for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

std::vector<int> exp_sum(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

long embed_all(std::vector<std::vector<CycNum>>& rows) {
  long n = 1;
  for (const auto& r : rows)
    for (const auto& v : r) n = lcm_long(n, v.conductor());
  for (auto& r : rows)
    for (auto& v : r)
      if (v.conductor() != n) v = v.embed(n);
  return n;
}

std::vector<CycNum> coeff_vector(const SparsePoly& f, const std::vector<std::vector<int>>& basis) {
  std::vector<CycNum> out;
  out.reserve(basis.size());
  for (const auto& e : basis) out.push_back(f.coeff(e));
  return out;
}

bool proportional(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

Catalecticant catalecticant(const SparsePoly& f) {
  require_ternary_quartic(f, "catalecticant");
  Catalecticant out;
  out.basis = monomials_of_degree(3, 2);
  std::vector<std::vector<CycNum>> rows(out.basis.size());
  for (size_t i = 0; i < out.basis.size(); ++i)
    for (size_t j = 0; j < out.basis.size(); ++j) {
      std::vector<int> prod = exp_sum(out.basis[i], out.basis[j]);
      rows[i].push_back(f.coeff(prod) * CycNum(exp_factorial(prod)));
    }
  out.matrix = CycMatrix(std::move(rows));
  out.determinant = out.matrix.det().minimized();
  out.rank = out.matrix.rank();
  return out;
}

bool is_degenerate(const SparsePoly& f) { return catalecticant(f).determinant.is_zero(); }

HexagonSystem hexagon_system(const SparsePoly& f, const std::vector<SparsePoly>& lines) {
  require_ternary_quartic(f, "hexagon_system");
  if (lines.size() != 6) throw math_error("hexagon_system: expected exactly 6 lines");
  std::vector<std::vector<int>> line_basis = monomials_of_degree(3, 1);
  std::vector<std::vector<CycNum>> line_coeffs;
  for (const auto& l : lines) {
    if (l.nvars() != 3 || l.is_zero() || !l.is_homogeneous() || l.degree() != 1)
      throw math_error("hexagon_system: lines must be nonzero linear forms in 3 variables");
    line_coeffs.push_back(coeff_vector(l, line_basis));
  }
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j)
      if (proportional(line_coeffs[i], line_coeffs[j]))
        throw math_error("hexagon_system: proportional lines");

  HexagonSystem out;
  out.quartic = f;
  out.lines = lines;
  out.basis = monomials_of_degree(3, 4);
  std::vector<std::vector<CycNum>> rows(out.basis.size());
  std::vector<SparsePoly> powers;
  for (const auto& l : lines) powers.push_back(l.pow(4));
  for (size_t r = 0; r < out.basis.size(); ++r)
    for (const auto& p : powers) rows[r].push_back(p.coeff(out.basis[r]));
  out.matrix = CycMatrix(std::move(rows));
  out.target = coeff_vector(f, out.basis);
  return out;
}

SolveResult powersum_solve(const SparsePoly& f, const std::vector<SparsePoly>& lines) {
  HexagonSystem sys = hexagon_system(f, lines);
  SolveResult out;
  out.rank_system = sys.matrix.rank();

  std::vector<std::vector<CycNum>> aug(static_cast<size_t>(sys.matrix.rows()));
  for (long r = 0; r < sys.matrix.rows(); ++r) {
    for (long c = 0; c < sys.matrix.cols(); ++c) aug[static_cast<size_t>(r)].push_back(sys.matrix.at(r, c));
    aug[static_cast<size_t>(r)].push_back(sys.target[static_cast<size_t>(r)]);
  }
  embed_all(aug);
  std::vector<long> pivots = rref_rows(aug);
  out.rank_augmented = static_cast<long>(pivots.size());

  if (out.rank_augmented > out.rank_system) {
    out.status = SolveStatus::inconsistent;
    return out;
  }
  out.status = SolveStatus::solved;
  out.multipliers.assign(6, CycNum(0));
  for (size_t k = 0; k < pivots.size(); ++k)
    out.multipliers[static_cast<size_t>(pivots[k])] = aug[k].back().minimized();
  return out;
}

ApolarEmbedding apolar_embedding(const SparsePoly& f) {
  require_ternary_quartic(f, "apolar_embedding");
  ApolarEmbedding out;
  out.basis = monomials_of_degree(3, 3);
  std::vector<std::vector<CycNum>> rows;
  SparsePoly euler(3);
  for (int v = 0; v < 3; ++v) {
    out.partials.push_back(f.derivative(v));
    rows.push_back(coeff_vector(out.partials.back(), out.basis));
    euler = euler + SparsePoly::variable(3, v) * out.partials.back();
  }
  if (euler != f * CycNum(4)) throw math_error("apolar_embedding: Euler identity failed");
  out.matrix = CycMatrix(std::move(rows));
  out.rank = out.matrix.rank();
  return out;
}

SkewFormBundle spusk_forms(const SparsePoly& f) {
  Catalecticant cat = catalecticant(f);
  if (cat.determinant.is_zero()) throw math_error("spusk_forms: degenerate quartic");

  // the inverse catalecticant read as a symmetric tensor of quadric pairs;
  // keeping the full tensor (never collapsing it to a single quartic) is what
  // makes the kernel containment an identity for every nondegenerate input
  CycMatrix inv = cat.matrix.inverse();

  std::vector<std::vector<int>> cubics = monomials_of_degree(3, 3);
  std::map<std::vector<int>, size_t, GrlexLess> cubic_index;
  for (size_t k = 0; k < cubics.size(); ++k) cubic_index[cubics[k]] = k;

  SkewFormBundle out;
  const std::pair<int, int> bivectors[3] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& [vi, vj] : bivectors) {
    std::vector<std::vector<CycNum>> omega(cubics.size(), std::vector<CycNum>(cubics.size(), CycNum(0)));
    for (size_t i = 0; i < cat.basis.size(); ++i)
      for (size_t j = 0; j < cat.basis.size(); ++j) {
        CycNum w = inv.at(static_cast<long>(i), static_cast<long>(j));
        if (w.is_zero()) continue;
        std::vector<int> ai = cat.basis[i], bj = cat.basis[j];
        std::vector<int> aj = cat.basis[i], bi = cat.basis[j];
        ++ai[static_cast<size_t>(vi)];
        ++bj[static_cast<size_t>(vj)];
        ++aj[static_cast<size_t>(vj)];
        ++bi[static_cast<size_t>(vi)];
        size_t u1 = cubic_index.at(ai), v1 = cubic_index.at(bj);
        size_t u2 = cubic_index.at(aj), v2 = cubic_index.at(bi);
        omega[u1][v1] += w;
        omega[v1][u1] -= w;
        omega[u2][v2] -= w;
        omega[v2][u2] += w;
      }
    CycMatrix m{std::move(omega)};
    bool zero = true;
    for (long r = 0; r < m.rows() && zero; ++r)
      for (long c2 = 0; c2 < m.cols() && zero; ++c2) zero = m.at(r, c2).is_zero();
    if (zero) throw math_error("spusk_forms: a skew form vanished; convention chain broke");
    out.ker_dimensions.push_back(m.kernel().dim());
    out.forms.push_back(std::move(m));
  }
  return out;
}

bool verify_spusk(const SparsePoly& f) {
  SkewFormBundle bundle = spusk_forms(f);
  ApolarEmbedding phi = apolar_embedding(f);
  std::vector<std::vector<int>> cubics = monomials_of_degree(3, 3);
  for (const CycMatrix& omega : bundle.forms) {
    for (const SparsePoly& partial : phi.partials) {
      // pair the partial into the form with the apolarity weights
      std::vector<CycNum> weighted;
      for (const auto& e : cubics) weighted.push_back(partial.coeff(e) * CycNum(exp_factorial(e)));
      long n = omega.conductor();
      for (auto& v : weighted) n = lcm_long(n, v.conductor());
      CycMatrix om = omega.conductor() == n ? omega : omega.embed(n);
      for (long r = 0; r < om.rows(); ++r) {
        CycNum s(0);
        s = s.embed(n);
        for (long c = 0; c < om.cols(); ++c)
          s += om.at(r, c) * weighted[static_cast<size_t>(c)].embed(n);
        if (!s.is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace klein
