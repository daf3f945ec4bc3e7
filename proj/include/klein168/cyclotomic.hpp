#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein {

using Rational = mpq_class;

struct conductor_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& r);

long totient(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

// Monic integer coefficients of Phi_n, index i = coefficient of x^i.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1) mod Phi_n.
class CycNum {
 public:
  CycNum() : n_(1), c_(1) {}
  CycNum(long v) : n_(1), c_(1, Rational(v)) {}
  CycNum(const Rational& r) : n_(1), c_(1, r) {}
  CycNum(long n, std::vector<Rational> coeffs);

  static CycNum zeta(long n);

  long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  CycNum inverse() const;
  // Galois automorphism zeta -> zeta^k, gcd(k, n) = 1.
  CycNum galois(long k) const;
  // Reinterpret in Q(zeta_m) for conductor() | m.
  CycNum embed(long m) const;
  // Try to rewrite in Q(zeta_m) for m | conductor(); nullopt if not contained.
  std::optional<CycNum> descend(long m) const;
  // Smallest conductor representation of the same value.
  CycNum minimized() const;
  // Complex conjugation.
  CycNum conj() const;

  std::complex<double> approx() const;

  std::string str() const;
  static CycNum parse(const std::string& s);

  // Raw key for hashing within a fixed-conductor context.
  std::string key() const;

  static std::pair<CycNum, CycNum> aligned(const CycNum& a, const CycNum& b);

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

 private:
  long n_;
  std::vector<Rational> c_;
  static std::vector<Rational> reduce_mod_phi(long n, std::vector<Rational> poly);
};

CycNum operator+(CycNum a, const CycNum& b);
CycNum operator-(CycNum a, const CycNum& b);
CycNum operator*(CycNum a, const CycNum& b);
CycNum operator/(CycNum a, const CycNum& b);

// zeta_7 + zeta_7^2 + zeta_7^4 = (-1 + sqrt(-7))/2, at conductor 7.
CycNum epsilon7();
// sqrt(-1) as zeta_4.
CycNum sqrt_minus_one();
// sqrt(-7) = 1 + 2*epsilon7, at conductor 7.
CycNum sqrt_minus_seven();

}  // namespace klein
