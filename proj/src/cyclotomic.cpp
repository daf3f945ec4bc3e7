#include "klein168/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace klein {

Rational make_rational(long num, long den) {
  if (den == 0) throw math_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw parse_error("empty rational");
  size_t pos = 0;
  if (t[0] == '+' || t[0] == '-') pos = 1;
  bool digits = false, slash = false;
  for (size_t i = pos; i < t.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(t[i]))) {
      digits = true;
    } else if (t[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw parse_error("bad rational: " + s);
    }
  }
  if (!digits) throw parse_error("bad rational: " + s);
  Rational r;
  if (r.set_str(t, 10) != 0) throw parse_error("bad rational: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw math_error("zero denominator in " + s);
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

long gcd_long(long a, long b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

long totient(long n) {
  if (n <= 0) throw math_error("totient of non-positive n");
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials, assuming divisibility and monic divisor.
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<mpz_class> q(dn - dd + 1);
  for (int d = dn; d >= dd; --d) {
    mpz_class c = num[d];
    q[d - dd] = c;
    if (c != 0)
      for (int i = 0; i <= dd; ++i) num[d - dd + i] -= c * den[i];
  }
  for (const auto& c : num)
    if (c != 0) throw math_error("non-exact polynomial division");
  return q;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<mpz_class>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const std::vector<mpz_class>&(long)> get =
      [&](long m) -> const std::vector<mpz_class>& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    std::vector<mpz_class> poly(m + 1);
    poly[0] = -1;
    poly[m] = 1;
    for (long d = 1; d < m; ++d)
      if (m % d == 0) poly = poly_div_exact(std::move(poly), get(d));
    return cache.emplace(m, std::move(poly)).first->second;
  };
  return get(n);
}

std::vector<Rational> CycNum::reduce_mod_phi(long n, std::vector<Rational> poly) {
  long phi = totient(n);
  // Fold exponents mod n first: x^n = 1 holds in Q[x]/(Phi_n).
  if (static_cast<long>(poly.size()) > n) {
    std::vector<Rational> folded(n);
    for (size_t i = 0; i < poly.size(); ++i) folded[i % n] += poly[i];
    poly = std::move(folded);
  }
  const auto& phi_poly = cyclotomic_polynomial(n);
  for (long d = static_cast<long>(poly.size()) - 1; d >= phi; --d) {
    if (poly[d] == 0) continue;
    Rational c = poly[d];
    for (long i = 0; i <= phi; ++i) poly[d - phi + i] -= c * Rational(phi_poly[i]);
  }
  poly.resize(phi);
  return poly;
}

CycNum::CycNum(long n, std::vector<Rational> coeffs) : n_(n) {
  if (n < 1) throw conductor_error("conductor must be positive");
  c_ = reduce_mod_phi(n, std::move(coeffs));
}

CycNum CycNum::zeta(long n) {
  if (n < 1) throw conductor_error("conductor must be positive");
  std::vector<Rational> c(n > 1 ? 2 : 1);
  if (n > 1)
    c[1] = 1;
  else
    c[0] = 1;
  return CycNum(n, std::move(c));
}

bool CycNum::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycNum::to_rational() const {
  auto m = minimized();
  if (m.n_ != 1) throw math_error("not a rational value: " + str());
  return m.c_[0];
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<CycNum, CycNum> CycNum::aligned(const CycNum& a, const CycNum& b) {
  if (a.n_ == b.n_) return {a, b};
  long m = lcm_long(a.n_, b.n_);
  return {a.embed(m), b.embed(m)};
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (n_ == o.n_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  if (o.n_ % n_ == 0)
    *this = embed(o.n_);
  else if (n_ % o.n_ != 0)
    throw conductor_error("incompatible conductors in +");
  CycNum ob = o.n_ == n_ ? o : o.embed(n_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += ob.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (n_ != o.n_) {
    if (o.n_ % n_ == 0)
      *this = embed(o.n_);
    else if (n_ % o.n_ == 0)
      return *this *= o.embed(n_);
    else
      throw conductor_error("incompatible conductors in *");
  }
  if (n_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = reduce_mod_phi(n_, std::move(prod));
  return *this;
}

namespace {

// Polynomial extended gcd over Q: returns (g, u) with u*a = g mod b, g = gcd(a,b).
struct PolyQ {
  std::vector<Rational> c;
  int deg() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      if (c[i] != 0) return i;
    return -1;
  }
  void trim() { c.resize(std::max(deg() + 1, 1)); }
};

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  PolyQ r;
  if (a.deg() < 0 || b.deg() < 0) {
    r.c.assign(1, Rational(0));
    return r;
  }
  r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

PolyQ poly_sub(PolyQ a, const PolyQ& b) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size());
  for (size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
  a.trim();
  return a;
}

// Division with remainder: a = q*b + r.
std::pair<PolyQ, PolyQ> poly_divmod(PolyQ a, const PolyQ& b) {
  int db = b.deg();
  if (db < 0) throw math_error("polynomial division by zero");
  PolyQ q;
  q.c.assign(std::max(a.deg() - db + 1, 1), Rational(0));
  while (a.deg() >= db) {
    int da = a.deg();
    Rational f = a.c[da] / b.c[db];
    q.c[da - db] += f;
    for (int i = 0; i <= db; ++i) a.c[da - db + i] -= f * b.c[i];
    a.trim();
    if (a.deg() < 0) break;
  }
  q.trim();
  return {q, a};
}

}  // namespace

CycNum CycNum::inverse() const {
  if (is_zero()) throw math_error("division by zero");
  if (n_ == 1) {
    CycNum r;
    r = CycNum(Rational(1) / c_[0]);
    return r;
  }
  PolyQ a;
  a.c = c_;
  a.trim();
  PolyQ b;
  const auto& phi = cyclotomic_polynomial(n_);
  b.c.reserve(phi.size());
  for (const auto& z : phi) b.c.emplace_back(z);

  // Extended Euclid tracking u with u*a = r (mod Phi_n).
  PolyQ r0 = b, r1 = a;
  PolyQ u0, u1;
  u0.c.assign(1, Rational(0));
  u1.c.assign(1, Rational(1));
  while (r1.deg() > 0) {
    auto [q, rem] = poly_divmod(r0, r1);
    PolyQ u2 = poly_sub(u0, poly_mul(q, u1));
    r0 = r1;
    r1 = rem;
    u0 = u1;
    u1 = u2;
  }
  if (r1.deg() < 0) throw math_error("inverse does not exist");
  Rational scale = Rational(1) / r1.c[0];
  std::vector<Rational> out = u1.c;
  for (auto& c : out) c *= scale;
  return CycNum(n_, std::move(out));
}

CycNum& CycNum::operator/=(const CycNum& o) {
  auto [a, b] = aligned(*this, o);
  *this = a * b.inverse();
  return *this;
}

CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

CycNum CycNum::galois(long k) const {
  k %= n_;
  if (k < 0) k += n_;
  if (gcd_long(k, n_) != 1) throw math_error("galois exponent not coprime to conductor");
  std::vector<Rational> poly(n_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    poly[(static_cast<long>(i) * k) % n_] += c_[i];
  }
  return CycNum(n_, std::move(poly));
}

CycNum CycNum::embed(long m) const {
  if (m % n_ != 0) throw conductor_error("embed target conductor not a multiple");
  if (m == n_) return *this;
  long step = m / n_;
  std::vector<Rational> poly(m);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    poly[static_cast<long>(i) * step] += c_[i];
  }
  return CycNum(m, std::move(poly));
}

std::optional<CycNum> CycNum::descend(long m) const {
  if (n_ % m != 0) throw conductor_error("descend target must divide conductor");
  if (m == n_) return *this;
  long phi_m = totient(m), phi_n = totient(n_);
  // Solve sum_j x_j * embed(zeta_m^j) = *this by Gaussian elimination over Q.
  std::vector<std::vector<Rational>> aug(phi_n, std::vector<Rational>(phi_m + 1));
  for (long j = 0; j < phi_m; ++j) {
    std::vector<Rational> basis(j + 1);
    basis[j] = 1;
    CycNum bj = CycNum(m, std::move(basis)).embed(n_);
    for (long i = 0; i < phi_n; ++i) aug[i][j] = bj.coeffs()[i];
  }
  for (long i = 0; i < phi_n; ++i) aug[i][phi_m] = c_[i];

  long row = 0;
  std::vector<long> pivot_col;
  for (long col = 0; col < phi_m && row < phi_n; ++col) {
    long pr = -1;
    for (long r = row; r < phi_n; ++r)
      if (aug[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(aug[row], aug[pr]);
    Rational inv = Rational(1) / aug[row][col];
    for (long c = col; c <= phi_m; ++c) aug[row][c] *= inv;
    for (long r = 0; r < phi_n; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (long c = col; c <= phi_m; ++c) aug[r][c] -= f * aug[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (long r = row; r < phi_n; ++r)
    if (aug[r][phi_m] != 0) return std::nullopt;
  std::vector<Rational> sol(phi_m);
  for (size_t k = 0; k < pivot_col.size(); ++k) sol[pivot_col[k]] = aug[k][phi_m];
  // Free columns stay zero; verify.
  CycNum cand(m, sol);
  if (cand.embed(n_) == *this) return cand;
  return std::nullopt;
}

CycNum CycNum::minimized() const {
  CycNum best = *this;
  for (long d = 1; d < n_; ++d) {
    if (n_ % d != 0) continue;
    if (auto down = descend(d)) {
      best = *down;
      break;
    }
  }
  if (best.n_ != n_ && best.n_ > 1) return best.minimized();
  return best;
}

CycNum CycNum::conj() const {
  if (n_ == 1) return *this;
  return galois(n_ - 1);
}

std::complex<double> CycNum::approx() const {
  std::complex<double> sum(0.0, 0.0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_);
    sum += c_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string CycNum::str() const {
  std::ostringstream out;
  out << "cyc(" << n_ << "; ";
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      out << rational_str(c);
    } else {
      if (c != 1) out << rational_str(c) << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  if (first) out << "0";
  out << ")";
  return out.str();
}

namespace {

struct TermParser {
  const std::string& s;
  size_t pos = 0;
  explicit TermParser(const std::string& str) : s(str) {}
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  Rational number() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    return parse_rational(s.substr(start, pos - start));
  }
  long integer() {
    Rational r = number();
    if (r.get_den() != 1) throw parse_error("expected integer");
    return static_cast<long>(r.get_num().get_si());
  }
};

}  // namespace

CycNum CycNum::parse(const std::string& input) {
  TermParser p(input);
  p.skip_ws();
  if (input.find("cyc") == std::string::npos) {
    // Bare rational, conductor 1.
    return CycNum(parse_rational(input));
  }
  if (input.compare(p.pos, 3, "cyc") != 0) throw parse_error("bad cyc literal: " + input);
  p.pos += 3;
  if (p.peek() != '(') throw parse_error("expected ( in " + input);
  ++p.pos;
  long n = p.integer();
  if (p.peek() != ';') throw parse_error("expected ; in " + input);
  ++p.pos;

  std::vector<Rational> poly(std::max(n, 1L));
  bool any = false;
  int sign = 1;
  while (true) {
    char ch = p.peek();
    if (ch == ')') {
      ++p.pos;
      break;
    }
    if (ch == '+') {
      ++p.pos;
      sign = 1;
      continue;
    }
    if (ch == '-') {
      ++p.pos;
      sign = -1;
      continue;
    }
    Rational coeff(1);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      coeff = p.number();
      saw_coeff = true;
    }
    long expo = 0;
    char nxt = p.peek();
    if (nxt == '*' || nxt == 'z') {
      if (nxt == '*') {
        ++p.pos;
        if (p.peek() != 'z') throw parse_error("expected z after * in " + input);
      }
      ++p.pos;  // consume z
      expo = 1;
      if (p.peek() == '^') {
        ++p.pos;
        expo = p.integer();
        if (expo < 0) throw parse_error("negative exponent in " + input);
      }
    } else if (!saw_coeff) {
      throw parse_error("unexpected character in " + input);
    }
    poly[expo % std::max(n, 1L)] += sign * coeff;
    sign = 1;
    any = true;
  }
  if (!p.eof()) throw parse_error("trailing characters in " + input);
  (void)any;
  return CycNum(n, std::move(poly));
}

std::string CycNum::key() const {
  std::ostringstream out;
  out << n_ << ":";
  for (const auto& c : c_) out << c.get_str() << ",";
  return out.str();
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  auto [x, y] = CycNum::aligned(a, b);
  return x.c_ == y.c_;
}

CycNum epsilon7() {
  std::vector<Rational> c(5);
  c[1] = 1;
  c[2] = 1;
  c[4] = 1;
  return CycNum(7, std::move(c));
}

CycNum sqrt_minus_one() { return CycNum::zeta(4); }

CycNum sqrt_minus_seven() {
  return CycNum(1) + CycNum(2) * epsilon7();
}

}  // namespace klein
