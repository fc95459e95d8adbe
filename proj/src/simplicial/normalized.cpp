#include "gerbeforge/simplicial/normalized.hpp"

#include "gerbeforge/error.hpp"

namespace gf {
namespace {

// h restricted to sub and corestricted to into, given h(sub) lies in into.
GroupHom restrict_hom(const GroupHom& h, const Subgroup& sub, const Subgroup& into) {
  const GroupHom through = compose(h, sub.inclusion);
  IntMatrix m(into.group->dimension(), sub.group->dimension());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto x = preimage(into.inclusion, through(GroupElement::basis(sub.group, c)));
    ensure(x.has_value(), "normalized complex: d_0 leaves the normalized chains");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = x->coords()[r];
  }
  return GroupHom(sub.group, into.group, std::move(m));
}

}  // namespace

NormalizedComplex::NormalizedComplex(const SimplicialAbelianGroup& x) {
  for (int n = 0; n <= x.top(); ++n) {
    if (n == 0) {
      chains_.push_back({x.level(0), GroupHom::identity(x.level(0))});
      differentials_.emplace_back();
      continue;
    }
    // ker of (d_1, ..., d_n): X_n -> sum of n copies of X_(n-1).
    const DirectSum target = direct_sum(std::vector<GroupPtr>(n, x.level(n - 1)));
    GroupHom stacked = GroupHom::zero(x.level(n), target.group);
    for (int k = 1; k <= n; ++k) stacked = stacked + compose(target.injections[k - 1], x.face(n, k));
    chains_.push_back(hom_kernel(stacked));
    differentials_.push_back(restrict_hom(x.face(n, 0), chains_[n], chains_[n - 1]));
  }
}

GroupPtr NormalizedComplex::homology(int n) const {
  if (n < 0 || n >= top()) throw InvalidInput("homology is available below the top level");
  const Subgroup cycles =
      n == 0 ? Subgroup{chains_[0].group, GroupHom::identity(chains_[0].group)}
             : hom_kernel(differentials_[n]);
  const GroupHom boundaries = restrict_hom(
      compose(chains_[n].inclusion, differentials_[n + 1]),
      Subgroup{chains_[n + 1].group, GroupHom::identity(chains_[n + 1].group)},
      Subgroup{cycles.group, compose(chains_[n].inclusion, cycles.inclusion)});
  return hom_cokernel(boundaries).group;
}

}  // namespace gf
