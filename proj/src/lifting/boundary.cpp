#include "gerbeforge/lifting/boundary.hpp"

#include "gerbeforge/error.hpp"
#include "gerbeforge/parallel.hpp"

namespace gf {
Cochain boundary1(const CentralExtension& ext, const Cochain& g, Execution execution) {
  if (g.degree() != 1 || !same_system(g.system(), ext.base()))
    throw ParentMismatch("boundary1: expected a 1-cochain of the base system");
  if (!is_cocycle(g, execution)) throw NotACocycle("boundary1: the base cochain is not a cocycle");
  const auto& nerve = *ext.nerve();
  const auto& triples = nerve.faces_of_dimension(2);

  auto lift_to = [&](std::size_t id, std::size_t k) {
    const std::size_t edge = nerve.id(omit(nerve.face(id), k));
    return ext.restrict(id, k, ext.section(edge, g[nerve.position(edge)]));
  };

  auto comps = indexed_map<GroupElement>(triples.size(), execution, [&](std::size_t pos) {
    const std::size_t id = triples[pos];
    // omit 2 -> ij, omit 0 -> jk, omit 1 -> ik
    const Bundle e_ij = lift_to(id, 2), e_jk = lift_to(id, 0), e_ik = lift_to(id, 1);
    const Bundle prod = ext.mul(id, ext.mul(id, e_ij, e_jk), ext.inv(id, e_ik));
    return ext.kernel_part(id, prod);
  });
  return Cochain(ext.kernel(), 2, std::move(comps));
}

Cochain boundary0(const CentralExtension& ext, const Cochain& g0, Execution execution) {
  if (g0.degree() != 0 || !same_system(g0.system(), ext.base()))
    throw ParentMismatch("boundary0: expected a 0-cochain of the base system");
  if (!is_cocycle(g0, execution))
    throw NotACocycle("boundary0: the section does not agree on overlaps");
  const auto& nerve = *ext.nerve();
  const auto& edges = nerve.faces_of_dimension(1);

  auto comps = indexed_map<GroupElement>(edges.size(), execution, [&](std::size_t pos) {
    const std::size_t id = edges[pos];
    const Face& f = nerve.face(id);
    // omit 1 -> i, omit 0 -> j
    const std::size_t i = nerve.id({f[0]}), j = nerve.id({f[1]});
    const Bundle e_i = ext.restrict(id, 1, ext.section(i, g0[nerve.position(i)]));
    const Bundle e_j = ext.restrict(id, 0, ext.section(j, g0[nerve.position(j)]));
    return ext.kernel_part(id, ext.mul(id, e_i, ext.inv(id, e_j)));
  });
  return Cochain(ext.kernel(), 1, std::move(comps));
}

HeisenbergGerbe heisenberg_gerbe(const HeisenbergExtension& ext, const Cochain& p, const Cochain& q,
                                 Execution execution) {
  if (!is_cocycle(p, execution) || !is_cocycle(q, execution))
    throw NotACocycle("heisenberg_gerbe: inputs must be 1-cocycles");
  Cochain cocycle = boundary1(ext, ext.pair(p, q), execution);
  Cochain product = cup(p, q, ext.tensor(), execution);
  const bool equals_cup = cocycle == product;
  const Cohomology h2(ext.kernel(), 2);
  GroupElement cls = h2.class_of(cocycle);
  std::optional<Cochain> witness;
  if (cls.is_zero()) {
    witness = is_coboundary(cocycle);
    ensure(witness.has_value(), "heisenberg_gerbe: zero class without a witness");
  }
  HeisenbergGerbe out{std::move(cocycle), std::move(product), equals_cup, h2.group(),
                      std::move(cls), std::move(witness)};
  return out;
}

}  // namespace gf
