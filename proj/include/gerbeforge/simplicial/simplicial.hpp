#pragma once

#include <vector>

#include "gerbeforge/groups.hpp"
#include "gerbeforge/sweep.hpp"

namespace gf {

// A monotone map [n] -> [m] as its list of values.
using Monotone = std::vector<int>;

// Monotone surjections [n] ->> [i] in lexicographic order of value lists.
const std::vector<Monotone>& surjections(int n, int i);

// s composed with the coface delta_k: [n-1] -> [n] that skips k.
Monotone after_coface(const Monotone& s, int k);
// s composed with the codegeneracy sigma_k: [n+1] -> [n] that repeats k.
Monotone after_codegeneracy(const Monotone& s, int k);
bool is_surjective_onto(const Monotone& s, int m);

// Levels 0..top with faces d_k: X_n -> X_{n-1} (k = 0..n) and degeneracies
// s_k: X_n -> X_{n+1} (k = 0..n, n < top).
class SimplicialAbelianGroup {
 public:
  SimplicialAbelianGroup(std::vector<GroupPtr> levels, std::vector<std::vector<GroupHom>> faces,
                         std::vector<std::vector<GroupHom>> degeneracies);

  int top() const { return static_cast<int>(levels_.size()) - 1; }
  const GroupPtr& level(int n) const { return levels_.at(n); }
  const GroupHom& face(int n, int k) const { return faces_.at(n).at(k); }
  const GroupHom& degeneracy(int n, int k) const { return degeneracies_.at(n).at(k); }

 private:
  std::vector<GroupPtr> levels_;
  std::vector<std::vector<GroupHom>> faces_;         // faces_[n], n >= 1
  std::vector<std::vector<GroupHom>> degeneracies_;  // degeneracies_[n], n < top
};

// K(M, i) up to level top, levels summed over surjections([n], [i]).
// Requires i in {1, 2} and top <= 4.
class EilenbergMacLane {
 public:
  EilenbergMacLane(GroupPtr m, int i, int top);

  const GroupPtr& coefficients() const { return m_; }
  int degree() const { return i_; }
  const SimplicialAbelianGroup& object() const { return object_; }
  // The summand of level n indexed by the surjection s.
  GroupHom summand_injection(int n, const Monotone& s) const;
  GroupHom summand_projection(int n, const Monotone& s) const;

 private:
  GroupPtr m_;
  int i_;
  std::vector<DirectSum> sums_;
  SimplicialAbelianGroup object_;
};

// The constant simplicial group on m: every level m, every map the identity.
SimplicialAbelianGroup constant_simplicial(const GroupPtr& m, int top);

// Levelwise direct sum.
SimplicialAbelianGroup product(const SimplicialAbelianGroup& x, const SimplicialAbelianGroup& y);

// All simplicial identities as matrix identities.
std::vector<LawCheck> check_simplicial_identities(const SimplicialAbelianGroup& x);

}  // namespace gf
