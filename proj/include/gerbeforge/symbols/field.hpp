#pragma once

#include <string>

#include "gerbeforge/symbols/poly.hpp"

namespace gf {

// F_p[t]/(modulus) for a monic irreducible modulus; elements are reduced
// polynomials of degree below deg(modulus).
class FiniteField {
 public:
  explicit FiniteField(Poly modulus);  // throws InvalidInput unless irreducible

  long p() const { return modulus_.p(); }
  int degree() const { return modulus_.degree(); }
  const Poly& modulus() const { return modulus_; }
  Integer order() const;

  Poly reduce(const Poly& x) const { return x % modulus_; }
  Poly one() const { return Poly::constant(p(), 1); }
  Poly mul(const Poly& a, const Poly& b) const { return a * b % modulus_; }
  Poly inv(const Poly& a) const;  // throws InvalidInput for 0
  Poly pow(const Poly& a, long e) const;  // negative e allowed for nonzero a
  // x^(1 + p + ... + p^(d-1)), an element of F_p.
  long norm(const Poly& a) const;

  std::string to_string() const;

 private:
  Poly modulus_;
};

}  // namespace gf
