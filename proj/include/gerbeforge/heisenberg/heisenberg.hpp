#pragma once

#include <string>

#include "gerbeforge/groups.hpp"

namespace gf {

// Element (a, b, t) of A x B x (A (x) B). Written additively in every slot.
struct HeisenbergElement {
  GroupElement a;
  GroupElement b;
  GroupElement t;

  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
  std::string to_string() const;
};

// The central extension 0 -> A (x) B -> H -> A x B -> 0 with product
// (a,b,t)(a',b',t') = (a+a', b+b', t+t'+a(x)b').
class HeisenbergGroup {
 public:
  HeisenbergGroup(GroupPtr a, GroupPtr b);
  explicit HeisenbergGroup(TensorProduct tensor);

  const GroupPtr& a_group() const { return tensor_.left; }
  const GroupPtr& b_group() const { return tensor_.right; }
  const GroupPtr& tensor_group() const { return tensor_.group; }
  const TensorProduct& tensor() const { return tensor_; }

  // Validates parents.
  HeisenbergElement element(GroupElement a, GroupElement b, GroupElement t) const;
  HeisenbergElement identity() const;
  // The canonical section (a, b) -> (a, b, 0).
  HeisenbergElement section(const GroupElement& a, const GroupElement& b) const;
  HeisenbergElement central(const GroupElement& t) const;

  HeisenbergElement mul(const HeisenbergElement& x, const HeisenbergElement& y) const;
  HeisenbergElement inv(const HeisenbergElement& x) const;
  // x y x^-1 y^-1
  HeisenbergElement commutator(const HeisenbergElement& x, const HeisenbergElement& y) const;
  bool is_central(const HeisenbergElement& x) const;

  // f(a,b,a',b') = a (x) b'
  GroupElement cocycle(const GroupElement& a, const GroupElement& b, const GroupElement& a2,
                       const GroupElement& b2) const;
  // a (x) b' - a' (x) b
  GroupElement alternation(const GroupElement& a, const GroupElement& b,
                           const GroupElement& a2, const GroupElement& b2) const;

  // Order of H when A and B are finite.
  std::optional<Integer> order() const;

  void check(const HeisenbergElement& x, const char* where) const;

 private:
  TensorProduct tensor_;
};

// H_{f,g}: (a, b, t) -> (f a, g b, (f (x) g) t).
class HeisenbergHom {
 public:
  HeisenbergHom(const HeisenbergGroup& source, const HeisenbergGroup& target, GroupHom f,
                GroupHom g);

  HeisenbergElement operator()(const HeisenbergElement& x) const;

  const GroupHom& a_map() const { return f_; }
  const GroupHom& b_map() const { return g_; }
  const GroupHom& tensor_map() const { return fg_; }

 private:
  GroupHom f_;
  GroupHom g_;
  GroupHom fg_;
};

struct PoonenRainsElement {
  GroupElement a;
  GroupElement t;

  friend bool operator==(const PoonenRainsElement&, const PoonenRainsElement&) = default;
  std::string to_string() const;
};

// UA: the pullback of H_{A,A} along the diagonal A -> A x A, with product
// (a,t)(a',t') = (a+a', t+t'+a(x)a').
class PoonenRainsGroup {
 public:
  explicit PoonenRainsGroup(GroupPtr a);

  const GroupPtr& a_group() const { return heisenberg_.a_group(); }
  const GroupPtr& tensor_group() const { return heisenberg_.tensor_group(); }
  const HeisenbergGroup& heisenberg() const { return heisenberg_; }

  PoonenRainsElement element(GroupElement a, GroupElement t) const;
  PoonenRainsElement identity() const;
  PoonenRainsElement mul(const PoonenRainsElement& x, const PoonenRainsElement& y) const;
  PoonenRainsElement inv(const PoonenRainsElement& x) const;
  // a (x) a'
  GroupElement cocycle(const GroupElement& a, const GroupElement& a2) const;
  GroupElement alternation(const GroupElement& a, const GroupElement& a2) const;

  // (a, t) -> (a, a, t) in H_{A,A}.
  HeisenbergElement diagonal(const PoonenRainsElement& x) const;

 private:
  HeisenbergGroup heisenberg_;
};

}  // namespace gf
