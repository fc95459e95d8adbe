#pragma once

#include <functional>
#include <optional>

#include "gerbeforge/cech/cohomology.hpp"
#include "gerbeforge/fourterm/complex.hpp"
#include "gerbeforge/lifting/extension.hpp"

namespace gf {

// Offsets added to the solver's lifts: x_i += x_offset(vertex id) must lie
// in ker p, l_ij += l_offset(edge id) in ker del. Used to exercise the
// independence of the class from every choice.
struct LiftChoice {
  std::function<GroupElement(std::size_t vertex)> x_offset;
  std::function<GroupElement(std::size_t edge)> l_offset;
};

LiftChoice random_lift_choice(const FourTermComplex& ft, std::uint64_t seed);

struct D2Result {
  Cochain cocycle;  // A-valued 2-cocycle
  GroupPtr h2;
  GroupElement cls;
  std::optional<Cochain> witness;  // present exactly when cls == 0
};

// The iterated boundary H^0(B) -> H^2(A), computed directly: lift beta to
// x_i in L0, c_ij = x_i - x_j, lift c_ij to l_ij in L1 and read
// l_ij + l_jk - l_ik in A. Throws NotACocycle when beta is not a global
// section and NoLocalLift when some beta_i has no preimage.
D2Result d2(const FourTermComplex& ft, const Cochain& beta, Execution execution = Execution::parallel,
            const LiftChoice* choice = nullptr);

// The same map as boundary1 of 0 -> A -> L1 -> C -> 0 after boundary0 of
// 0 -> C -> L0 -> B -> 0, through the generic lifting code.
struct FactoredD2 {
  Cochain torsor;  // C-valued 1-cocycle
  Cochain gerbe;   // A-valued 2-cocycle
  GroupElement cls;
};

FactoredD2 d2_factored(const FourTermComplex& ft, const MiddleImage& mid, const Cochain& beta,
                       Execution execution = Execution::parallel);

// The groupoid of local lifts of beta on one face: objects g in L0 with
// p(g) = beta, morphisms g -> g' the h in L1 with del(h) = g - g'.
struct FiberGroupoidReport {
  Face face;
  bool enumerated = false;
  std::optional<Integer> objects;
  std::optional<Integer> automorphisms;
  std::size_t pairs_checked = 0;
  std::size_t nonempty_pairs = 0;
  bool hom_sets_are_torsors = true;  // every nonempty hom set has |A| elements
  std::optional<Integer> components;
  std::string automorphism_group;  // ker del, in normal form
  bool automorphisms_match_a = false;
};

// Enumerates when L0 and L1 are finite with at most `max_elements` elements
// on the face; otherwise reports the automorphism group symbolically.
FiberGroupoidReport fiber_groupoid_report(const FourTermComplex& ft, const Cochain& beta,
                                          const Face& face, std::size_t max_elements = 1 << 16,
                                          std::size_t max_pairs = 4096);

}  // namespace gf
