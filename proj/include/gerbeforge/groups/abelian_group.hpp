#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gerbeforge/groups/int_matrix.hpp"

namespace gf {

// Finitely generated abelian group Z/d1 + ... + Z/dk + Z^r in invariant-factor
// normal form: 2 <= d1 | d2 | ... | dk, free summands last. Group equality is
// equality of this normal form.
class FgAbGroup {
 public:
  FgAbGroup() = default;  // trivial group
  FgAbGroup(std::vector<Integer> invariant_factors, std::size_t free_rank);

  static FgAbGroup cyclic(long n);  // n == 0 gives Z, n == 1 the trivial group
  static FgAbGroup free(std::size_t rank);
  // Any list of cyclic orders (0 for Z); normalized through Smith form.
  static FgAbGroup from_cyclic_orders(const std::vector<Integer>& orders);
  // Accepts "0", "Z", "Z^3", "Z/4", "Z/2+Z/4+Z".
  static FgAbGroup parse(const std::string& text);

  const std::vector<Integer>& invariant_factors() const { return torsion_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t torsion_rank() const { return torsion_.size(); }
  std::size_t dimension() const { return torsion_.size() + free_rank_; }
  bool is_trivial() const { return dimension() == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  std::optional<Integer> order() const;
  // Annihilator of coordinate i: d_i for torsion coordinates, 0 for free ones.
  Integer modulus(std::size_t i) const;
  IntVector moduli() const;

  void reduce_in_place(IntVector& coords) const;
  IntVector reduce(IntVector coords) const;
  // dimension x torsion_rank matrix whose columns are the defining relations.
  IntMatrix relation_matrix() const;

  std::string to_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  std::vector<Integer> torsion_;
  std::size_t free_rank_ = 0;
};

using GroupPtr = std::shared_ptr<const FgAbGroup>;

GroupPtr make_group(FgAbGroup g);
GroupPtr trivial_group();

bool same_group(const GroupPtr& a, const GroupPtr& b);

// Element of a normal-form group; torsion coordinates live in [0, d_i).
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupPtr parent, IntVector coords);

  static GroupElement zero(GroupPtr parent);
  static GroupElement basis(GroupPtr parent, std::size_t i);

  const GroupPtr& parent() const { return parent_; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& rhs) const;
  GroupElement operator-(const GroupElement& rhs) const;
  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& rhs);
  GroupElement scaled(const Integer& k) const;

  // Equal parents and equal coordinates.
  friend bool operator==(const GroupElement& a, const GroupElement& b);

  std::string to_string() const;

 private:
  GroupPtr parent_;
  IntVector coords_;
};

void require_parent(const GroupElement& x, const GroupPtr& g, const char* where);

// Homomorphism given by a matrix acting on coordinate columns:
// matrix is target.dimension() x source.dimension().
class GroupHom {
 public:
  GroupHom() = default;
  // Throws InvalidInput if the matrix does not respect torsion.
  GroupHom(GroupPtr source, GroupPtr target, IntMatrix matrix);

  static GroupHom identity(GroupPtr g);
  static GroupHom zero(GroupPtr source, GroupPtr target);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement operator()(const GroupElement& x) const;
  IntVector apply(std::span<const Integer> coords) const;

  bool is_zero() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b);

 private:
  GroupPtr source_;
  GroupPtr target_;
  IntMatrix matrix_;
};

// Whether d_i times column i vanishes in the target for every torsion
// generator of the source.
bool respects_torsion(const FgAbGroup& source, const FgAbGroup& target, const IntMatrix& m);

// g after f.
GroupHom compose(const GroupHom& g, const GroupHom& f);
GroupHom operator+(const GroupHom& a, const GroupHom& b);

struct Subgroup {
  GroupPtr group;
  GroupHom inclusion;
};

struct Quotient {
  GroupPtr group;
  GroupHom projection;
  // Coordinates of a lift in the source for each generator of the quotient.
  IntMatrix section;
};

Subgroup hom_kernel(const GroupHom& h);
Subgroup hom_image(const GroupHom& h);
Quotient hom_cokernel(const GroupHom& h);

bool is_injective(const GroupHom& h);
bool is_surjective(const GroupHom& h);

// Some x with h(x) == y, or nullopt.
std::optional<GroupElement> preimage(const GroupHom& h, const GroupElement& y);

// im f == ker g for composable f, g.
bool is_exact(const GroupHom& f, const GroupHom& g);

// Subgroup of g generated by the columns of gens (coordinates in g).
Subgroup generated_subgroup(const GroupPtr& g, const IntMatrix& gens);

struct DirectSum {
  GroupPtr group;
  std::vector<GroupHom> injections;
  std::vector<GroupHom> projections;
};

DirectSum direct_sum(const std::vector<GroupPtr>& summands);

// Z^cols modulo the row space of m, in normal form.
FgAbGroup cokernel(const IntMatrix& m);

// Calls fn on every element of a finite group in mixed-radix order
// (last coordinate fastest). Throws InvalidInput for infinite groups.
void for_each_element(const GroupPtr& g, const std::function<void(const GroupElement&)>& fn);
std::vector<GroupElement> all_elements(const GroupPtr& g);

// Index of an element of a finite group in the enumeration order above, and back.
std::size_t element_index(const GroupElement& x);
GroupElement element_at(const GroupPtr& g, std::size_t index);

}  // namespace gf
