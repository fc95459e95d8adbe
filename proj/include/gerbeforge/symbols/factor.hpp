#pragma once

#include <cstdint>
#include <vector>

#include "gerbeforge/symbols/poly.hpp"

namespace gf {

struct Factor {
  Poly prime;  // monic irreducible
  int multiplicity;
};

// Monic irreducible factorization of a nonzero f, sorted by the Poly order;
// the leading coefficient is dropped. Squarefree decomposition, then
// distinct-degree, then equal-degree splitting with a fixed-seed generator.
std::vector<Factor> factor(const Poly& f);

// Rabin's test: t^(p^n) = t mod f and gcd(t^(p^(n/q)) - t, f) = 1 for each
// prime q dividing n = deg f.
bool is_irreducible(const Poly& f);

}  // namespace gf
