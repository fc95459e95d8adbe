#include "gerbeforge/groups/tensor.hpp"

#include "gerbeforge/error.hpp"
#include "gerbeforge/groups/lattice.hpp"

namespace gf {

TensorProduct tensor(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t na = a->dimension(), nb = b->dimension();
  IntMatrix rels = kron(a->relation_matrix(), IntMatrix::identity(nb))
                       .hstack(kron(IntMatrix::identity(na), b->relation_matrix()));
  Presentation p = present(na * nb, rels);
  return {a, b, p.group, std::move(p.to_normal), std::move(p.from_normal)};
}

GroupElement TensorProduct::operator()(const GroupElement& x, const GroupElement& y) const {
  return tensor_elements(*this, x, y);
}

GroupElement tensor_elements(const TensorProduct& t, const GroupElement& x, const GroupElement& y) {
  require_parent(x, t.left, "tensor_elements (left factor)");
  require_parent(y, t.right, "tensor_elements (right factor)");
  IntVector k = kron(x.coords(), y.coords());
  return GroupElement(t.group, t.bilinear * std::span<const Integer>(k));
}

GroupHom tensor_hom(const GroupHom& f, const GroupHom& g, const TensorProduct& source,
                    const TensorProduct& target) {
  if (!same_group(f.source(), source.left) || !same_group(g.source(), source.right) ||
      !same_group(f.target(), target.left) || !same_group(g.target(), target.right))
    throw ParentMismatch("tensor_hom: homomorphisms do not match the tensor factors");
  IntMatrix m = target.bilinear * kron(f.matrix(), g.matrix()) * source.lift;
  return GroupHom(source.group, target.group, std::move(m));
}

}  // namespace gf
