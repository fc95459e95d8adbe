#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gerbeforge/groups/int_matrix.hpp"

namespace gf {

// Arithmetic in F_p for a prime p <= 97.
class PrimeField {
 public:
  explicit PrimeField(long p);

  long p() const { return p_; }
  long reduce(long x) const;
  long add(long a, long b) const { return (a + b) % p_; }
  long sub(long a, long b) const { return (a - b + p_) % p_; }
  long mul(long a, long b) const { return a * b % p_; }
  long neg(long a) const { return a == 0 ? 0 : p_ - a; }
  long inv(long a) const;  // throws InvalidInput for 0
  long pow(long a, const Integer& e) const;
  // Smallest generator of F_p^*.
  long primitive_root() const;

 private:
  long p_;
};

bool is_prime(long n);

// Polynomial over F_p, coefficients constant term first, no trailing zeros.
class Poly {
 public:
  Poly(long p, std::vector<long> coefficients);

  static Poly zero(long p) { return Poly(p, {}); }
  static Poly constant(long p, long c) { return Poly(p, {c}); }
  static Poly t(long p) { return Poly(p, {0, 1}); }
  static Poly monomial(long p, long c, int degree);

  long p() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  const std::vector<long>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  long lead() const { return c_.empty() ? 0 : c_.back(); }
  long coefficient(int k) const { return k < 0 || k > degree() ? 0 : c_[k]; }

  Poly monic() const;
  Poly derivative() const;
  // t^deg f(1/t).
  Poly reversed() const;
  long eval(long x) const;
  // g with g^p = f, for f with zero derivative.
  Poly pth_root() const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator-() const;
  Poly operator*(const Poly& rhs) const;
  Poly scaled(long c) const;
  Poly operator/(const Poly& rhs) const;  // quotient
  Poly operator%(const Poly& rhs) const;  // remainder

  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;
  // Degree first, then coefficients from the top.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void require_same_field(const Poly& rhs, const char* where) const;
  void trim();

  long p_;
  std::vector<long> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic, or zero
// (g, s, t) with s a + t b = g monic.
struct ExtendedGcd {
  Poly g, s, t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);
Poly pow_mod(const Poly& base, const Integer& e, const Poly& modulus);

// Every monic polynomial of the given degree over F_p, in increasing order.
std::vector<Poly> monic_polynomials(long p, int degree);

}  // namespace gf
