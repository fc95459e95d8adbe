#pragma once

#include "gerbeforge/heisenberg/heisenberg.hpp"
#include "gerbeforge/simplicial/simplicial.hpp"

namespace gf {

// Level-2 cup K(A,1) x K(B,1) -> K(A(x)B, 2): front face of x tensor back
// face of y, x u y = d_2 x (x) d_0 y, landing in the single summand of
// K(A(x)B, 2)_2.
class AwCup {
 public:
  AwCup(GroupPtr a, GroupPtr b);

  const EilenbergMacLane& k_a() const { return k_a_; }
  const EilenbergMacLane& k_b() const { return k_b_; }
  const EilenbergMacLane& k_ab() const { return k_ab_; }

  GroupElement operator()(const GroupElement& x, const GroupElement& y) const;
  // The cup read as an element of A(x)B.
  GroupElement value(const GroupElement& x, const GroupElement& y) const;

  // The 2-simplex of K(M,1) with d_2 = g1 and d_0 = g2 (so d_1 = g1 + g2),
  // as in the nerve of M.
  static GroupElement bar(const EilenbergMacLane& k, const GroupElement& g1, const GroupElement& g2);

 private:
  TensorProduct tensor_;
  EilenbergMacLane k_a_, k_b_, k_ab_;
};

struct Prop34Options {
  Execution execution = Execution::parallel;
  // Exhaustive over (A x B)^2 when |A x B| <= this bound, random otherwise.
  std::uint64_t exhaustive_order = 64;
  std::uint64_t random_cases = 2000;
  std::uint64_t seed = 1;
};

// aw(bar(a, a'), bar(b, b')) == a (x) b', the Heisenberg cocycle, plus the
// face readings of the bar coordinates.
std::vector<LawCheck> verify_aw_cup(const GroupPtr& a, const GroupPtr& b,
                                    const Prop34Options& options = {});

// H_n(N K(M, i)) for n < top equals M in degree i and vanishes elsewhere.
std::vector<LawCheck> verify_dold_kan(const GroupPtr& m, int i, int top = 4);

}  // namespace gf
