#include "gerbeforge/heisenberg/heisenberg.hpp"

#include "gerbeforge/error.hpp"

namespace gf {

std::string HeisenbergElement::to_string() const {
  return "(" + a.to_string() + ", " + b.to_string() + ", " + t.to_string() + ")";
}

HeisenbergGroup::HeisenbergGroup(GroupPtr a, GroupPtr b) : tensor_(gf::tensor(a, b)) {}

HeisenbergGroup::HeisenbergGroup(TensorProduct tensor) : tensor_(std::move(tensor)) {}

void HeisenbergGroup::check(const HeisenbergElement& x, const char* where) const {
  require_parent(x.a, a_group(), where);
  require_parent(x.b, b_group(), where);
  require_parent(x.t, tensor_group(), where);
}

HeisenbergElement HeisenbergGroup::element(GroupElement a, GroupElement b, GroupElement t) const {
  HeisenbergElement x{std::move(a), std::move(b), std::move(t)};
  check(x, "HeisenbergGroup::element");
  return x;
}

HeisenbergElement HeisenbergGroup::identity() const {
  return {GroupElement::zero(a_group()), GroupElement::zero(b_group()),
          GroupElement::zero(tensor_group())};
}

HeisenbergElement HeisenbergGroup::section(const GroupElement& a, const GroupElement& b) const {
  return element(a, b, GroupElement::zero(tensor_group()));
}

HeisenbergElement HeisenbergGroup::central(const GroupElement& t) const {
  return element(GroupElement::zero(a_group()), GroupElement::zero(b_group()), t);
}

HeisenbergElement HeisenbergGroup::mul(const HeisenbergElement& x,
                                       const HeisenbergElement& y) const {
  check(x, "HeisenbergGroup::mul");
  check(y, "HeisenbergGroup::mul");
  return {x.a + y.a, x.b + y.b, x.t + y.t + tensor_(x.a, y.b)};
}

HeisenbergElement HeisenbergGroup::inv(const HeisenbergElement& x) const {
  check(x, "HeisenbergGroup::inv");
  return {-x.a, -x.b, -x.t + tensor_(x.a, x.b)};
}

HeisenbergElement HeisenbergGroup::commutator(const HeisenbergElement& x,
                                              const HeisenbergElement& y) const {
  return mul(mul(x, y), mul(inv(x), inv(y)));
}

bool HeisenbergGroup::is_central(const HeisenbergElement& x) const {
  check(x, "HeisenbergGroup::is_central");
  return x.a.is_zero() && x.b.is_zero();
}

GroupElement HeisenbergGroup::cocycle(const GroupElement& a, const GroupElement& b,
                                      const GroupElement& a2, const GroupElement& b2) const {
  require_parent(b, b_group(), "HeisenbergGroup::cocycle");
  require_parent(a2, a_group(), "HeisenbergGroup::cocycle");
  return tensor_(a, b2);
}

GroupElement HeisenbergGroup::alternation(const GroupElement& a, const GroupElement& b,
                                          const GroupElement& a2,
                                          const GroupElement& b2) const {
  return tensor_(a, b2) - tensor_(a2, b);
}

std::optional<Integer> HeisenbergGroup::order() const {
  auto oa = a_group()->order(), ob = b_group()->order(), ot = tensor_group()->order();
  if (!oa || !ob || !ot) return std::nullopt;
  return *oa * *ob * *ot;
}

HeisenbergHom::HeisenbergHom(const HeisenbergGroup& source, const HeisenbergGroup& target,
                             GroupHom f, GroupHom g)
    : f_(std::move(f)),
      g_(std::move(g)),
      fg_(tensor_hom(f_, g_, source.tensor(), target.tensor())) {}

HeisenbergElement HeisenbergHom::operator()(const HeisenbergElement& x) const {
  return {f_(x.a), g_(x.b), fg_(x.t)};
}

std::string PoonenRainsElement::to_string() const {
  return "(" + a.to_string() + ", " + t.to_string() + ")";
}

PoonenRainsGroup::PoonenRainsGroup(GroupPtr a) : heisenberg_(a, a) {}

PoonenRainsElement PoonenRainsGroup::element(GroupElement a, GroupElement t) const {
  require_parent(a, a_group(), "PoonenRainsGroup::element");
  require_parent(t, tensor_group(), "PoonenRainsGroup::element");
  return {std::move(a), std::move(t)};
}

PoonenRainsElement PoonenRainsGroup::identity() const {
  return {GroupElement::zero(a_group()), GroupElement::zero(tensor_group())};
}

PoonenRainsElement PoonenRainsGroup::mul(const PoonenRainsElement& x,
                                         const PoonenRainsElement& y) const {
  require_parent(x.t, tensor_group(), "PoonenRainsGroup::mul");
  require_parent(y.t, tensor_group(), "PoonenRainsGroup::mul");
  return {x.a + y.a, x.t + y.t + heisenberg_.tensor()(x.a, y.a)};
}

PoonenRainsElement PoonenRainsGroup::inv(const PoonenRainsElement& x) const {
  require_parent(x.t, tensor_group(), "PoonenRainsGroup::inv");
  return {-x.a, -x.t + heisenberg_.tensor()(x.a, x.a)};
}

GroupElement PoonenRainsGroup::cocycle(const GroupElement& a, const GroupElement& a2) const {
  return heisenberg_.tensor()(a, a2);
}

GroupElement PoonenRainsGroup::alternation(const GroupElement& a, const GroupElement& a2) const {
  return cocycle(a, a2) - cocycle(a2, a);
}

HeisenbergElement PoonenRainsGroup::diagonal(const PoonenRainsElement& x) const {
  return heisenberg_.element(x.a, x.a, x.t);
}

}  // namespace gf
