#pragma once

#include <optional>

#include "gerbeforge/cech/cochain.hpp"
#include "gerbeforge/groups/lattice.hpp"

namespace gf {

// Cech cohomology H^p = ker d_p / im d_{p-1} of the cover, with the maps
// between cocycles and classes. This is the cohomology of the given nerve;
// it agrees with sheaf cohomology only when the cover is acyclic.
class Cohomology {
 public:
  Cohomology(SystemPtr system, int degree);

  const SystemPtr& system() const { return system_; }
  int degree() const { return degree_; }
  const GroupPtr& group() const { return subquotient_.group(); }

  // Throws NotACocycle when c is not closed.
  GroupElement class_of(const Cochain& c) const;
  Cochain representative(const GroupElement& cls) const;

 private:
  SystemPtr system_;
  int degree_;
  Subquotient subquotient_;
};

// Some b with db = c (degree >= 1), or nullopt. Throws NotACocycle.
std::optional<Cochain> is_coboundary(const Cochain& c);

}  // namespace gf
