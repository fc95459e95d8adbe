#pragma once

#include <optional>

#include "gerbeforge/cech/cohomology.hpp"
#include "gerbeforge/lifting/extension.hpp"

namespace gf {

// Gerbe of lifts of a G-torsor given by the 1-cocycle g:
// a(i,j,k) = s(g_ij) s(g_jk) s(g_ik)^-1 on U_ijk, read in A.
// Throws NotACocycle when g is not closed.
Cochain boundary1(const CentralExtension& ext, const Cochain& g,
                  Execution execution = Execution::parallel);

// Torsor of lifts of a global section g0 of G: a(i,j) = e_i e_j^-1 on U_ij
// with e_i = s(g0_i). Throws NotACocycle when g0 is not a global section.
Cochain boundary0(const CentralExtension& ext, const Cochain& g0,
                  Execution execution = Execution::parallel);

struct HeisenbergGerbe {
  Cochain cocycle;  // boundary1 of (p, q)
  Cochain cup;      // p cup q
  bool equals_cup = false;
  GroupPtr h2;
  GroupElement cls;
  std::optional<Cochain> witness;  // d witness = cocycle, when trivial
};

// The Heisenberg gerbe attached to the torsors p (A-valued) and q (B-valued).
HeisenbergGerbe heisenberg_gerbe(const HeisenbergExtension& ext, const Cochain& p, const Cochain& q,
                                 Execution execution = Execution::parallel);

}  // namespace gf
