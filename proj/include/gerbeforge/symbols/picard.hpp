#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gerbeforge/cech/cohomology.hpp"
#include "gerbeforge/symbols/rational.hpp"

namespace gf {

// O^* of the projective line over F_p on the two standard charts
// U0 = Spec F_p[t] and U1 = Spec F_p[1/t]: F_p^* on each chart and
// F_p^* x t^Z on the overlap. Coordinates are the discrete log to the
// smallest primitive root, then the exponent of t.
class UnitSystem {
 public:
  explicit UnitSystem(long p);

  long p() const { return p_; }
  long root() const { return root_; }
  const SystemPtr& system() const { return system_; }
  const Cohomology& h1() const { return *h1_; }

  // c on the chart `vertex`.
  GroupElement chart_unit(std::size_t vertex, long c) const;
  // c t^k on the overlap; throws InvalidInput for any other function.
  GroupElement overlap_unit(const RationalFunction& g) const;
  // The degree of a class under H^1 = Pic(P^1) = Z, normalised so that the
  // class of the cocycle g01 = t has degree 1.
  long degree(const GroupElement& cls) const;

 private:
  IntVector log(long c) const;

  long p_;
  long root_;
  SystemPtr system_;
  std::shared_ptr<const Cohomology> h1_;
  Integer t_class_;  // coordinate of the class of t in H^1
};

struct DivisorTorsor {
  RationalFunction f0;   // local equation on U0
  RationalFunction f1;   // local equation on U1, written in t
  RationalFunction g01;  // f0 / f1, a unit on the overlap
  Cochain cocycle;
  GroupElement cls;
  long degree;
};

// The Cech 1-cocycle of O_D on the two-chart cover: f_i has divisor D on U_i
// and g01 = f0 / f1.
DivisorTorsor divisor_torsor_cocycle(const Divisor& d, const UnitSystem& units);

// The exact sequence O^* -> K_S^* -> Div_S of systems on the two-chart
// nerve, for a finite set S of places containing (t) and infinity. K_S^* is
// the constant group of functions c prod pi^e over the finite pi in S.
class DivisorSequence {
 public:
  DivisorSequence(std::shared_ptr<const UnitSystem> units, std::vector<Place> support);

  const UnitSystem& units() const { return *units_; }
  const std::vector<Place>& support() const { return support_; }
  const SystemPtr& s_units() const { return s_units_; }
  const SystemPtr& divisors() const { return divisors_; }
  const SystemHom& inclusion() const { return *inclusion_; }
  const SystemHom& div() const { return *div_; }

  // D as a global section of Div_S; throws InvalidInput if D leaves S.
  Cochain global_section(const Divisor& d) const;
  // boundary0 of D through the sequence: the torsor of local equations.
  Cochain torsor_of(const Divisor& d) const;

 private:
  std::vector<std::size_t> places_on(std::size_t face) const;

  std::shared_ptr<const UnitSystem> units_;
  std::vector<Place> support_;  // sorted, infinity last
  std::vector<Place> finite_;
  SystemPtr s_units_;
  SystemPtr divisors_;
  std::optional<SystemHom> inclusion_;
  std::optional<SystemHom> div_;
};

}  // namespace gf
