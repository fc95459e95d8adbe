#include "gerbeforge/symbols/field.hpp"

#include "gerbeforge/error.hpp"
#include "gerbeforge/symbols/factor.hpp"

namespace gf {

FiniteField::FiniteField(Poly modulus) : modulus_(std::move(modulus)) {
  if (modulus_.lead() != 1 || !is_irreducible(modulus_))
    throw InvalidInput("residue field modulus must be monic irreducible: " + modulus_.to_string());
}

Integer FiniteField::order() const {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p()), static_cast<unsigned long>(degree()));
  return q;
}

Poly FiniteField::inv(const Poly& a) const {
  const Poly r = reduce(a);
  if (r.is_zero()) throw InvalidInput("division by zero in " + to_string());
  const auto [g, s, t] = extended_gcd(r, modulus_);
  ensure(g.is_one(), "residue field element without inverse");
  return reduce(s);
}

Poly FiniteField::pow(const Poly& a, long e) const {
  const Poly base = e < 0 ? inv(a) : reduce(a);
  return pow_mod(base, Integer(e < 0 ? -e : e), modulus_);
}

long FiniteField::norm(const Poly& a) const {
  const Integer e = (order() - 1) / (p() - 1);
  const Poly n = pow_mod(reduce(a), e, modulus_);
  ensure(n.is_constant(), "norm left the prime field");
  return n.coefficient(0);
}

std::string FiniteField::to_string() const {
  if (degree() == 1) return "F_" + std::to_string(p()) + "[t]/(" + modulus_.to_string() + ")";
  return "F_" + std::to_string(p()) + "^" + std::to_string(degree()) + " = F_" + std::to_string(p()) +
         "[t]/(" + modulus_.to_string() + ")";
}

}  // namespace gf
