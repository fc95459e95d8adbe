#pragma once

#include <string>
#include <vector>

#include "gerbeforge/execution.hpp"
#include "gerbeforge/symbols/field.hpp"
#include "gerbeforge/symbols/rational.hpp"

namespace gf {

// Valuation of f != 0 at v; at infinity deg(den) - deg(num).
long ord(const Place& v, const RationalFunction& f);

// An element of the residue field at a place.
struct ResidueValue {
  FiniteField field;
  Poly value;
};

// (-1)^(ord f * ord g) f^(ord g) / g^(ord f) reduced at v. Infinity is
// handled as the place (u) after t -> 1/u.
ResidueValue tame_symbol(const Place& v, const RationalFunction& f, const RationalFunction& g);

// Sum of ord_v(f) v over all places, infinity included.
Divisor divisor(const RationalFunction& f);

struct LocalSymbol {
  Place place;
  Poly value;  // in the residue field
  long norm;   // in F_p
};

struct ReciprocityReport {
  std::vector<LocalSymbol> local;  // supp(div f) + supp(div g) + infinity, sorted
  long product = 1;
  bool holds() const { return product == 1; }
};

// Product over places of the norms of the tame symbols.
ReciprocityReport weil_reciprocity(const RationalFunction& f, const RationalFunction& g,
                                   Execution execution = Execution::parallel);

}  // namespace gf
