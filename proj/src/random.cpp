#include "gerbeforge/random.hpp"

namespace gf {

long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

GroupElement random_element(const GroupPtr& g, Rng& rng, long free_range) {
  IntVector c(g->dimension());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Integer m = g->modulus(i);
    c[i] = m == 0 ? uniform_int(rng, -free_range, free_range)
                  : uniform_int(rng, 0, static_cast<long>(m.get_ui()) - 1);
  }
  return GroupElement(g, std::move(c));
}

}  // namespace gf
