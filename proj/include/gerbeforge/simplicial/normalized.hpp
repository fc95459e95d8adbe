#pragma once

#include "gerbeforge/simplicial/simplicial.hpp"

namespace gf {

// N_n = intersection of ker d_k over k > 0, with differential d_0.
class NormalizedComplex {
 public:
  explicit NormalizedComplex(const SimplicialAbelianGroup& x);

  int top() const { return static_cast<int>(chains_.size()) - 1; }
  const Subgroup& chains(int n) const { return chains_.at(n); }
  // N_n -> N_(n-1), n >= 1.
  const GroupHom& differential(int n) const { return differentials_.at(n); }
  // H_n for n < top; the top level has no incoming boundaries.
  GroupPtr homology(int n) const;

 private:
  std::vector<Subgroup> chains_;
  std::vector<GroupHom> differentials_;  // index 0 unused
};

}  // namespace gf
