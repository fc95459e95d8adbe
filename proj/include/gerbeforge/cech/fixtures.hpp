#pragma once

#include <string>
#include <vector>

#include "gerbeforge/cech/cochain.hpp"
#include "gerbeforge/cech/system.hpp"
#include "gerbeforge/random.hpp"

namespace gf {

// "circle", "sphere", "torus" (seven vertices), "two_chart", "full_simplex:<n>".
CoverNerve nerve_preset(const std::string& name);

// Z/d_S on face S with d_S = gcd of the orders attached to its indices
// (0 stands for Z), restrictions the reduction maps Z/d_S -> Z/d_T.
CoefficientSystem gcd_system(NervePtr nerve, const std::vector<long>& index_orders);

// Facewise direct sum with block restrictions.
CoefficientSystem direct_sum_system(const SystemPtr& a, const SystemPtr& b);

// A gcd system, or the direct sum of two, with orders drawn from `orders`.
CoefficientSystem random_system(const NervePtr& nerve, Rng& rng,
                                const std::vector<long>& orders = {2, 4, 6, 12, 0});

// The group g on every face of the circle nerve with the restriction from
// {2} to {0,2} negated and every other restriction the identity.
CoefficientSystem mobius_system(GroupPtr g);

// A random gcd system, a second gcd system whose face orders divide those of
// the first, and the hom between them given by multiplication by a random
// factor in 1..5.
SystemHom random_reduction(const NervePtr& nerve, Rng& rng);

// A random nerve on n indices: every edge with probability 3/4, every
// triangle of present edges with probability 1/2, tetrahedra when all
// triangles are present with probability 1/2.
CoverNerve random_nerve(int n, Rng& rng);

// A random class representative of H^p, moved by a random coboundary.
Cochain random_cocycle(const SystemPtr& s, int p, Rng& rng);

// Cycles through the circle, full simplices on 3..5 indices, the sphere and
// random nerves on 4 or 5 indices.
NervePtr fixture_nerve(int trial, Rng& rng);

// Finite groups of order at most max_order in a fixed order. Every abelian
// group of order <= 10 appears; larger orders are sampled.
std::vector<GroupPtr> group_battery(long max_order = 16);

}  // namespace gf
