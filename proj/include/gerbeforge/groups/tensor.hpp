#pragma once

#include "gerbeforge/groups/abelian_group.hpp"

namespace gf {

// A (x) B together with its universal bilinear map. The group comes from the
// Kronecker presentation (generators e_i (x) f_j, relations d_i e_i (x) f_j and
// e_i (x) d'_j f_j) reduced through Smith form; `bilinear` sends the Kronecker
// coordinate vector x (x) y to normal-form coordinates of the tensor group.
struct TensorProduct {
  GroupPtr left;
  GroupPtr right;
  GroupPtr group;
  IntMatrix bilinear;  // group.dim x (left.dim * right.dim)
  IntMatrix lift;      // (left.dim * right.dim) x group.dim

  GroupElement operator()(const GroupElement& x, const GroupElement& y) const;
};

TensorProduct tensor(const GroupPtr& a, const GroupPtr& b);

GroupElement tensor_elements(const TensorProduct& t, const GroupElement& x, const GroupElement& y);

// f (x) g between two tensor products whose factors match the homs.
GroupHom tensor_hom(const GroupHom& f, const GroupHom& g, const TensorProduct& source,
                    const TensorProduct& target);

}  // namespace gf
