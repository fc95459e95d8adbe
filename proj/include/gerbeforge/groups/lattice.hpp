#pragma once

#include <optional>

#include "gerbeforge/groups/abelian_group.hpp"
#include "gerbeforge/groups/smith.hpp"

namespace gf {

// Z^n modulo the column span of a relation matrix, brought to normal form.
struct Presentation {
  GroupPtr group;
  IntMatrix to_normal;    // group.dimension() x n
  IntMatrix from_normal;  // n x group.dimension()
};

Presentation present(std::size_t generators, const IntMatrix& relations);

// (<cycles> + R) / (<boundaries> + R) inside Z^n / R, where R is given by its
// relation columns. Boundaries must lie in <cycles> + R.
class Subquotient {
 public:
  Subquotient(IntMatrix relations, IntMatrix cycles, IntMatrix boundaries);

  const GroupPtr& group() const { return presentation_.group; }
  // Class of an ambient vector; nullopt when it is not in <cycles> + R.
  std::optional<GroupElement> class_of(std::span<const Integer> x) const;
  // Ambient coordinates of a representative of a class.
  IntVector representative(const GroupElement& cls) const;
  const IntMatrix& cycles() const { return cycles_; }

 private:
  IntMatrix relations_;
  IntMatrix cycles_;
  Presentation presentation_;
  LinearSystem membership_;
};

}  // namespace gf
