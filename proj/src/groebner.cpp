#include "klein168/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace klein {

namespace {

long addm(long a, long b, long p) { return (a + b) % p; }
long mulm(long a, long b, long p) { return (a * b) % p; }

long powm(long base, long e, long p) {
  long r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) r = mulm(r, base, p);
    base = mulm(base, base, p);
    e >>= 1;
  }
  return r;
}

long invm(long a, long p) {
  long r = powm(((a % p) + p) % p, p - 2, p);
  if (mulm(r, ((a % p) + p) % p, p) != 1) throw math_error("no modular inverse");
  return r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

struct GrevlexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    return grevlex_less(b, a);
  }
};

using TermMap = std::map<std::vector<int>, long, GrevlexGreater>;

PrimeFieldPoly from_map(long p, int nvars, const TermMap& m) {
  PrimeFieldPoly f;
  f.p = p;
  f.nvars = nvars;
  f.terms.reserve(m.size());
  for (const auto& kv : m)
    if (kv.second % p != 0) f.terms.emplace_back(kv.first, ((kv.second % p) + p) % p);
  return f;
}

bool exp_divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<int> exp_lcm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

std::vector<int> exp_sub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

long exp_degree(const std::vector<int>& a) { return std::accumulate(a.begin(), a.end(), 0L); }

// m += c * x^shift * g
void addmul(TermMap& m, long p, long c, const std::vector<int>& shift, const PrimeFieldPoly& g) {
  for (const auto& t : g.terms) {
    std::vector<int> e(t.first.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = t.first[i] + shift[i];
    auto it = m.find(e);
    long v = addm(it == m.end() ? 0 : it->second, mulm(c, t.second, p), p);
    if (v == 0) {
      if (it != m.end()) m.erase(it);
    } else if (it == m.end()) {
      m.emplace(std::move(e), v);
    } else {
      it->second = v;
    }
  }
}

PrimeFieldPoly make_monic(const PrimeFieldPoly& f) {
  if (f.is_zero()) return f;
  long s = invm(f.leading_coefficient(), f.p);
  PrimeFieldPoly out = f;
  for (auto& t : out.terms) t.second = mulm(t.second, s, f.p);
  return out;
}

long find_reducer(const std::vector<PrimeFieldPoly>& basis, const std::vector<int>& e,
                  long skip = -1) {
  for (size_t k = 0; k < basis.size(); ++k) {
    if (static_cast<long>(k) == skip || basis[k].is_zero()) continue;
    if (exp_divides(basis[k].leading_exponent(), e)) return static_cast<long>(k);
  }
  return -1;
}

PrimeFieldPoly normal_form_skip(const PrimeFieldPoly& f, const std::vector<PrimeFieldPoly>& basis,
                                long skip) {
  TermMap cur;
  for (const auto& t : f.terms) cur.emplace(t.first, t.second);
  TermMap rem;
  while (!cur.empty()) {
    auto lead = cur.begin();
    long k = find_reducer(basis, lead->first, skip);
    if (k < 0) {
      rem.emplace(lead->first, lead->second);
      cur.erase(lead);
      continue;
    }
    const PrimeFieldPoly& g = basis[static_cast<size_t>(k)];
    long c = mulm(lead->second, invm(g.leading_coefficient(), f.p), f.p);
    addmul(cur, f.p, f.p - c, exp_sub(lead->first, g.leading_exponent()), g);
  }
  return from_map(f.p, f.nvars, rem);
}

PrimeFieldPoly s_polynomial(const PrimeFieldPoly& f, const PrimeFieldPoly& g) {
  std::vector<int> L = exp_lcm(f.leading_exponent(), g.leading_exponent());
  TermMap m;
  addmul(m, f.p, invm(f.leading_coefficient(), f.p), exp_sub(L, f.leading_exponent()), f);
  addmul(m, f.p, f.p - invm(g.leading_coefficient(), f.p), exp_sub(L, g.leading_exponent()), g);
  return from_map(f.p, f.nvars, m);
}

long coeff_residue(const Rational& r, long p) {
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  unsigned long dm = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p));
  if (dm == 0) throw math_error("prime divides a coefficient denominator");
  unsigned long nm = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p));
  return mulm(static_cast<long>(nm), invm(static_cast<long>(dm), p), p);
}

}  // namespace

bool grevlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw math_error("grevlex compare needs equal variable counts");
  long da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da < db;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

long PrimeFieldPoly::degree() const {
  if (terms.empty()) return -1;
  return exp_degree(terms.front().first);
}

const std::vector<int>& PrimeFieldPoly::leading_exponent() const {
  if (terms.empty()) throw math_error("zero polynomial has no leading term");
  return terms.front().first;
}

long PrimeFieldPoly::leading_coefficient() const {
  if (terms.empty()) throw math_error("zero polynomial has no leading term");
  return terms.front().second;
}

std::string PrimeFieldPoly::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += std::to_string(t.second);
    for (size_t i = 0; i < t.first.size(); ++i) {
      if (t.first[i] == 0) continue;
      out += "*x" + std::to_string(i + 1);
      if (t.first[i] > 1) out += "^" + std::to_string(t.first[i]);
    }
  }
  return out;
}

long default_zeta_image(long p, long n) {
  if (!is_prime(p)) throw math_error("modulus must be prime");
  if (n < 1 || (p - 1) % n != 0)
    throw math_error("prime is not 1 mod the conductor " + std::to_string(n));
  if (n == 1) return 1;
  auto qs = prime_factors(p - 1);
  long root = 0;
  for (long r = 2; r < p; ++r) {
    bool primitive = true;
    for (long q : qs)
      if (powm(r, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      root = r;
      break;
    }
  }
  if (root == 0) throw math_error("no primitive root found");
  return powm(root, (p - 1) / n, p);
}

PrimeFieldPoly reduce_mod_p(const SparsePoly& f, long p, long zeta_image) {
  if (!is_prime(p)) throw math_error("modulus must be prime");
  long n = 1;
  for (const auto& t : f.terms()) n = lcm_long(n, t.second.conductor());
  if (n > 1) {
    if ((p - 1) % n != 0) throw math_error("prime is not 1 mod the conductor " + std::to_string(n));
    long z = ((zeta_image % p) + p) % p;
    if (powm(z, n, p) != 1) throw math_error("zeta image is not an n-th root of unity");
    for (long q : prime_factors(n))
      if (powm(z, n / q, p) == 1)
        throw math_error("zeta image has multiplicative order below the conductor");
    zeta_image = z;
  }

  TermMap m;
  for (const auto& t : f.terms()) {
    CycNum c = t.second.embed(n);
    long v = 0;
    long zk = 1;
    for (const auto& r : c.coeffs()) {
      v = addm(v, mulm(coeff_residue(r, p), zk, p), p);
      zk = mulm(zk, n > 1 ? zeta_image : 1, p);
    }
    if (v != 0) m.emplace(t.first, v);
  }
  PrimeFieldPoly out = from_map(p, f.nvars(), m);
  if (!f.is_zero() && out.degree() != f.degree())
    throw math_error("prime collapses the leading form");
  return out;
}

PrimeFieldPoly reduce_mod_p(const SparsePoly& f, long p) {
  long n = 1;
  for (const auto& t : f.terms()) n = lcm_long(n, t.second.conductor());
  return reduce_mod_p(f, p, n > 1 ? default_zeta_image(p, n) : 1);
}

std::vector<std::vector<int>> GroebnerBasis::leading_terms() const {
  std::vector<std::vector<int>> out;
  out.reserve(polys.size());
  for (const auto& g : polys) out.push_back(g.leading_exponent());
  return out;
}

PrimeFieldPoly normal_form(const PrimeFieldPoly& f, const std::vector<PrimeFieldPoly>& basis) {
  return normal_form_skip(f, basis, -1);
}

GroebnerBasis buchberger(const std::vector<PrimeFieldPoly>& gens) {
  if (gens.empty()) throw math_error("empty generator list");
  long p = gens[0].p;
  int nvars = gens[0].nvars;
  std::vector<PrimeFieldPoly> basis;
  for (const auto& g : gens) {
    if (g.p != p || g.nvars != nvars)
      throw math_error("generators disagree on prime or variable count");
    if (!g.is_zero()) basis.push_back(make_monic(g));
  }
  if (basis.empty()) throw math_error("all generators are zero");

  // queue entries: (lcm degree, insertion index, i, j); treated pairs feed
  // the chain criterion
  std::set<std::tuple<long, long, size_t, size_t>> queue;
  std::set<std::pair<size_t, size_t>> treated;
  long stamp = 0;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      std::vector<int> L =
          exp_lcm(basis[i].leading_exponent(), basis[j].leading_exponent());
      queue.emplace(exp_degree(L), stamp++, i, j);
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    auto [deg, idx, i, j] = *queue.begin();
    queue.erase(queue.begin());
    treated.emplace(i, j);

    const auto& ei = basis[i].leading_exponent();
    const auto& ej = basis[j].leading_exponent();
    std::vector<int> L = exp_lcm(ei, ej);

    bool coprime = true;
    for (size_t v = 0; v < L.size(); ++v)
      if (ei[v] > 0 && ej[v] > 0) coprime = false;
    if (coprime) continue;

    bool chained = false;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!exp_divides(basis[k].leading_exponent(), L)) continue;
      auto ik = std::minmax(i, k), jk = std::minmax(j, k);
      if (treated.count({ik.first, ik.second}) && treated.count({jk.first, jk.second}))
        chained = true;
    }
    if (chained) continue;

    PrimeFieldPoly s = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (s.is_zero()) continue;
    basis.push_back(make_monic(s));
    push_pairs(basis.size() - 1);
  }

  // minimal basis: drop any polynomial whose leading term is divisible by
  // another survivor's leading term
  std::vector<size_t> order(basis.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return grevlex_less(basis[a].leading_exponent(), basis[b].leading_exponent());
  });
  std::vector<PrimeFieldPoly> minimal;
  for (size_t k : order) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (exp_divides(kept.leading_exponent(), basis[k].leading_exponent())) redundant = true;
    if (!redundant) minimal.push_back(basis[k]);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < minimal.size(); ++k) {
      PrimeFieldPoly r = normal_form_skip(minimal[k], minimal, static_cast<long>(k));
      if (r.is_zero()) throw math_error("reduced basis member collapsed");
      r = make_monic(r);
      if (!(r == minimal[k])) {
        minimal[k] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [](const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    return grevlex_less(a.leading_exponent(), b.leading_exponent());
  });

  GroebnerBasis out;
  out.p = p;
  out.nvars = nvars;
  out.polys = std::move(minimal);
  return out;
}

long affine_staircase_dimension(const GroebnerBasis& gb) {
  for (const auto& g : gb.polys)
    if (g.degree() == 0) return -1;
  int n = gb.nvars;
  auto lts = gb.leading_terms();
  long best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& e : lts) {
      bool inside = true;
      for (int v = 0; v < n; ++v)
        if (e[static_cast<size_t>(v)] > 0 && !(mask & (1u << v))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, static_cast<long>(__builtin_popcount(mask)));
  }
  return best;
}

long projective_dimension(const std::vector<SparsePoly>& gens, const std::vector<long>& primes) {
  if (gens.empty()) throw math_error("empty generator list");
  if (primes.empty()) throw math_error("need at least one prime");
  for (const auto& f : gens) {
    if (!f.is_homogeneous()) throw math_error("generators must be homogeneous");
    if (f.is_zero()) throw math_error("zero generator");
  }
  long dim = 0;
  bool first = true;
  for (long p : primes) {
    std::vector<PrimeFieldPoly> mod;
    mod.reserve(gens.size());
    for (const auto& f : gens) mod.push_back(reduce_mod_p(f, p));
    long d = affine_staircase_dimension(buchberger(mod)) - 1;
    if (first) {
      dim = d;
      first = false;
    } else if (d != dim) {
      throw math_error("projective dimension disagrees across primes: " + std::to_string(dim) +
                       " vs " + std::to_string(d) + " at p = " + std::to_string(p));
    }
  }
  return dim;
}

bool is_smooth_hypersurface(const SparsePoly& f, const std::vector<long>& primes) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
    throw math_error("smoothness needs a nonzero homogeneous form of positive degree");
  if (primes.empty()) throw math_error("need at least one prime");
  std::vector<SparsePoly> jac{f};
  for (int v = 0; v < f.nvars(); ++v) {
    SparsePoly d = f.derivative(v);
    if (!d.is_zero()) jac.push_back(std::move(d));
  }
  bool smooth = false;
  bool first = true;
  for (long p : primes) {
    std::vector<PrimeFieldPoly> mod;
    mod.reserve(jac.size());
    for (const auto& g : jac) mod.push_back(reduce_mod_p(g, p));
    bool s = affine_staircase_dimension(buchberger(mod)) <= 0;
    if (first) {
      smooth = s;
      first = false;
    } else if (s != smooth) {
      throw math_error("smoothness disagrees across primes at p = " + std::to_string(p));
    }
  }
  return smooth;
}

const std::vector<long>& default_primes() {
  static const std::vector<long> primes{31991, 65521};
  return primes;
}

}  // namespace klein
