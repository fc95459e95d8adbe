#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gerbeforge/fourterm/d2.hpp"
#include "gerbeforge/sweep.hpp"

namespace gf {

// A packaged exact complex together with what its d2 should do.
struct LibraryComplex {
  std::string name;
  std::string description;
  FourTermComplex complex;
  bool has_nonzero_d2;  // some global section of B has d2 != 0
};

std::vector<std::string> library_names();
LibraryComplex library_complex(const std::string& name);  // throws InvalidInput
std::vector<LibraryComplex> library();

struct D2Verification {
  std::string name;
  std::size_t samples = 0;
  std::size_t nonzero = 0;  // samples with d2 != 0
  std::vector<LawCheck> laws;

  bool passed() const { return all_passed(laws); }
};

// On at least `samples` seeded global sections of B, every basis vector of
// H^0(B) included:
//   d2 equals boundary1 after boundary0 through the spliced image,
//   d2 is additive in beta,
//   d2 does not depend on the lifts (random offsets in ker p, ker del),
//   the serial and parallel kernels agree.
D2Verification verify_d2(const FourTermComplex& ft, std::string name, std::uint64_t seed,
                         std::size_t samples = 6, Execution execution = Execution::parallel);

}  // namespace gf
