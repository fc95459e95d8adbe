#pragma once

#include <map>
#include <optional>
#include <string>

#include "gerbeforge/random.hpp"
#include "gerbeforge/symbols/poly.hpp"

namespace gf {

// numerator / denominator over F_p, coprime, denominator monic; zero is 0/1.
class RationalFunction {
 public:
  RationalFunction(Poly numerator, Poly denominator);
  explicit RationalFunction(Poly numerator);

  static RationalFunction constant(long p, long c) { return RationalFunction(Poly::constant(p, c)); }
  static RationalFunction t(long p) { return RationalFunction(Poly::t(p)); }

  long p() const { return num_.p(); }
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction operator/(const RationalFunction& rhs) const;
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;
  RationalFunction one_minus() const;
  // f(1/u) as a function of u.
  RationalFunction at_infinity_chart() const;

  std::string to_string() const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Poly num_;
  Poly den_;
};

// Numerator of degree <= max_degree (nonzero), monic denominator of degree
// <= max_degree, then reduced.
RationalFunction random_rational(long p, int max_degree, Rng& rng);

// A place of F_p(t): a monic irreducible pi, or infinity.
class Place {
 public:
  static Place infinity(long p) { return Place(p, std::nullopt); }
  static Place finite(Poly prime);  // throws InvalidInput unless monic irreducible

  long p() const { return p_; }
  bool is_infinite() const { return !prime_; }
  const Poly& prime() const;  // throws InvalidInput at infinity
  int degree() const { return prime_ ? prime_->degree() : 1; }
  // The residue field modulus: pi, or u at infinity.
  Poly residue_modulus() const { return prime_ ? *prime_ : Poly::t(p_); }

  std::string to_string() const;

  friend bool operator==(const Place&, const Place&) = default;
  // Finite places in Poly order, infinity last.
  friend bool operator<(const Place& a, const Place& b);

 private:
  Place(long p, std::optional<Poly> prime) : p_(p), prime_(std::move(prime)) {}

  long p_;
  std::optional<Poly> prime_;
};

// Finite formal sum of places; zero coefficients are never stored.
class Divisor {
 public:
  Divisor() = default;

  void add(const Place& v, long n);
  long coefficient(const Place& v) const;
  const std::map<Place, long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  long degree() const;

  Divisor operator+(const Divisor& rhs) const;
  Divisor operator-() const;

  std::string to_string() const;
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<Place, long> terms_;
};

}  // namespace gf
