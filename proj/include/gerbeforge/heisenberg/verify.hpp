#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gerbeforge/heisenberg/heisenberg.hpp"
#include "gerbeforge/sweep.hpp"

namespace gf {

struct AxiomOptions {
  Execution execution = Execution::parallel;
  // Associativity is exhaustive when |H| <= this bound (triples |H|^3).
  std::uint64_t exhaustive_order = 4096;
  std::uint64_t random_triples = 10000;
  std::uint64_t seed = 1;
};

struct AxiomReport {
  std::string group;
  std::uint64_t order = 0;
  bool exhaustive = false;
  std::vector<LawCheck> laws;

  bool passed() const { return all_passed(laws); }
};

// Identity, inverse and associativity of the Heisenberg law on a finite H.
// Serial: every product goes through HeisenbergGroup::mul. Parallel: the
// component tables (sums in A, B, A(x)B and the pairing a(x)b) are tabulated
// from the library, the full product table is checked against mul on every
// pair, and associativity is then swept over index triples.
AxiomReport verify_group_axioms(const HeisenbergGroup& g, const AxiomOptions& options = {});

// Central-extension laws, all exhaustive on a finite H:
//   normalized 2-cocycle identity for f over (A x B)^3,
//   [h, h'] = (0, 0, alternation) over H^2,
//   (0, 0, t) central and the projection to A x B a homomorphism,
//   alternation biadditive and alternating.
std::vector<LawCheck> verify_extension_laws(const HeisenbergGroup& g, Execution execution);

// H_{f,g} is a homomorphism, checked on every pair of the finite source.
LawCheck verify_hom_property(const HeisenbergGroup& source, const HeisenbergGroup& target,
                             const HeisenbergHom& h, Execution execution);

// UA: cocycle equals f(a, a, a', a') on all pairs of a finite A; the diagonal
// is a homomorphism into H_{A,A} on all pairs (a, a') with up to eight central
// parts each; inverses agree on all of UA.
std::vector<LawCheck> verify_poonen_rains(const PoonenRainsGroup& ua, Execution execution);

}  // namespace gf
