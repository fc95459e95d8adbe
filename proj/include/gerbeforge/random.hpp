#pragma once

#include <random>

#include "gerbeforge/groups/abelian_group.hpp"

namespace gf {

using Rng = std::mt19937_64;

// Uniform on torsion coordinates, uniform in [-free_range, free_range] on free ones.
GroupElement random_element(const GroupPtr& g, Rng& rng, long free_range = 8);

long uniform_int(Rng& rng, long lo, long hi);

}  // namespace gf
