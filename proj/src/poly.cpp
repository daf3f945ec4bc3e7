#include "klein168/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace klein {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  long da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  return a < b;
}

SparsePoly SparsePoly::constant(int nvars, const CycNum& c) {
  SparsePoly p(nvars);
  p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw math_error("variable index out of range");
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i)] = 1;
  SparsePoly p(nvars);
  p.add_term(std::move(e), CycNum(1));
  return p;
}

SparsePoly SparsePoly::monomial(int nvars, std::vector<int> exps, const CycNum& c) {
  if (static_cast<int>(exps.size()) != nvars) throw math_error("exponent vector length mismatch");
  for (int e : exps)
    if (e < 0) throw math_error("negative exponent");
  SparsePoly p(nvars);
  p.add_term(std::move(exps), c);
  return p;
}

void SparsePoly::add_term(std::vector<int> exps, const CycNum& c) {
  if (static_cast<int>(exps.size()) != nvars_) throw math_error("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exps), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

long SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  long d = 0;
  for (int e : terms_.rbegin()->first) d += e;
  return d;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = degree();
  for (const auto& [e, c] : terms_) {
    long t = 0;
    for (int x : e) t += x;
    if (t != d) return false;
  }
  return true;
}

CycNum SparsePoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? CycNum(0) : it->second;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw math_error("variable count mismatch");
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw math_error("variable count mismatch");
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw math_error("variable count mismatch");
  SparsePoly r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

SparsePoly SparsePoly::operator*(const CycNum& s) const {
  SparsePoly r(nvars_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) {
    CycNum v = c * s;
    if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
  }
  return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin(), jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

SparsePoly SparsePoly::pow(long k) const {
  if (k < 0) throw math_error("negative polynomial power");
  SparsePoly r = constant(nvars_, CycNum(1));
  for (long i = 0; i < k; ++i) r = r * *this;
  return r;
}

SparsePoly SparsePoly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw math_error("variable index out of range");
  SparsePoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<size_t>(var)];
    if (k == 0) continue;
    std::vector<int> d(e);
    --d[static_cast<size_t>(var)];
    r.add_term(std::move(d), c * CycNum(k));
  }
  return r;
}

CycNum SparsePoly::evaluate(const std::vector<CycNum>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw math_error("point dimension mismatch");
  CycNum total;
  for (const auto& [e, c] : terms_) {
    CycNum t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) t *= point[static_cast<size_t>(i)];
    total += t;
  }
  return total;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff_txt;
    bool negative = false;
    bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (c.is_rational()) {
      Rational q = c.to_rational();
      if (q < 0) {
        negative = true;
        q = -q;
      }
      if (q != 1 || is_const) coeff_txt = rational_str(q);
    } else {
      coeff_txt = c.str();
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      int k = e[static_cast<size_t>(i)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (coeff_txt.empty()) {
      out += mono;
    } else if (mono.empty()) {
      out += coeff_txt;
    } else {
      out += coeff_txt + "*" + mono;
    }
  }
  return out;
}

namespace {

// Splits on top-level occurrences of sign characters, keeping the sign with
// the following chunk. Parenthesized cyc(...) literals are kept intact.
std::vector<std::string> split_terms(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if ((ch == '+' || ch == '-') && depth == 0 && !cur.empty()) {
      bool only_space = true;
      for (char q : cur)
        if (!std::isspace(static_cast<unsigned char>(q))) only_space = false;
      if (!only_space) {
        parts.push_back(cur);
        cur.clear();
      }
    }
    cur.push_back(ch);
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

std::vector<std::string> split_factors(const std::string& term) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : term) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '*' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

SparsePoly SparsePoly::parse(int nvars, const std::string& text) {
  SparsePoly result(nvars);
  std::string body = strip(text);
  if (body.empty()) throw parse_error("empty polynomial");
  if (body == "0") return result;
  for (const auto& raw_term : split_terms(body)) {
    std::string term = strip(raw_term);
    bool neg = false;
    while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      if (term[0] == '-') neg = !neg;
      term = strip(term.substr(1));
    }
    if (term.empty()) throw parse_error("dangling sign in polynomial");
    CycNum coeff(1);
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    for (const auto& raw_factor : split_factors(term)) {
      std::string f = strip(raw_factor);
      if (f.empty()) throw parse_error("empty factor in '" + term + "'");
      if (f[0] == 'x') {
        size_t caret = f.find('^');
        std::string var_txt = caret == std::string::npos ? f.substr(1) : f.substr(1, caret - 1);
        int idx = 0;
        try {
          idx = std::stoi(strip(var_txt));
        } catch (...) {
          throw parse_error("bad variable '" + f + "'");
        }
        if (idx < 1 || idx > nvars) throw parse_error("variable index out of range in '" + f + "'");
        int e = 1;
        if (caret != std::string::npos) {
          try {
            e = std::stoi(strip(f.substr(caret + 1)));
          } catch (...) {
            throw parse_error("bad exponent '" + f + "'");
          }
          if (e < 0) throw parse_error("negative exponent in '" + f + "'");
        }
        exps[static_cast<size_t>(idx - 1)] += e;
      } else {
        coeff *= CycNum::parse(f);
      }
    }
    if (neg) coeff = -coeff;
    result.add_term(std::move(exps), coeff);
  }
  return result;
}

SparsePoly substitute_linear(const SparsePoly& f, const std::vector<std::vector<CycNum>>& forms) {
  int n = f.nvars();
  if (static_cast<int>(forms.size()) != n) throw math_error("substitution arity mismatch");
  std::vector<SparsePoly> lin;
  lin.reserve(forms.size());
  for (const auto& row : forms) {
    if (static_cast<int>(row.size()) != n) throw math_error("substitution form length mismatch");
    SparsePoly L(n);
    for (int i = 0; i < n; ++i) L.add_term([&] {
      std::vector<int> e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i)] = 1;
      return e;
    }(), row[static_cast<size_t>(i)]);
    lin.push_back(std::move(L));
  }
  // Powers of each linear form, grown on demand.
  std::vector<std::vector<SparsePoly>> pw(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pw[static_cast<size_t>(i)].push_back(SparsePoly::constant(n, CycNum(1)));
  auto power = [&](int var, int k) -> const SparsePoly& {
    auto& v = pw[static_cast<size_t>(var)];
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * lin[static_cast<size_t>(var)]);
    return v[static_cast<size_t>(k)];
  };
  SparsePoly out(n);
  for (const auto& [e, c] : f.terms()) {
    SparsePoly t = SparsePoly::constant(n, c);
    for (int i = 0; i < n; ++i)
      if (e[static_cast<size_t>(i)] > 0) t = t * power(i, e[static_cast<size_t>(i)]);
    out = out + t;
  }
  return out;
}

SparsePoly act(const CycMatrix& m, const SparsePoly& f) {
  if (m.rows() != m.cols() || m.rows() != f.nvars()) throw math_error("matrix/polynomial dimension mismatch");
  CycMatrix inv = m.inverse();
  // Variable j becomes (x * M^{-1})_j = column j of M^{-1} dotted with x.
  std::vector<std::vector<CycNum>> forms(static_cast<size_t>(f.nvars()));
  for (long j = 0; j < inv.cols(); ++j)
    for (long i = 0; i < inv.rows(); ++i) forms[static_cast<size_t>(j)].push_back(inv.at(i, j));
  return substitute_linear(f, forms);
}

bool is_invariant(const SparsePoly& f, const std::vector<CycMatrix>& gens) {
  for (const auto& g : gens)
    if (act(g, f) != f) return false;
  return true;
}

SparsePoly hessian(const SparsePoly& f) {
  if (f.nvars() != 3) throw math_error("hessian expects 3 variables");
  if (!f.is_homogeneous()) throw math_error("hessian expects a homogeneous polynomial");
  SparsePoly h[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = f.derivative(i).derivative(j);
  SparsePoly det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                   h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                   h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  return det;
}

std::vector<std::vector<int>> monomials_of_degree(int nvars, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      cur[static_cast<size_t>(var)] = left;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[static_cast<size_t>(var)] = k;
      rec(var + 1, left - k);
    }
  };
  if (nvars == 0) return out;
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return GrlexLess()(a, b); });
  return out;
}

}  // namespace klein
