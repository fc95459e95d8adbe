#pragma once

// Shared generators and brute-force oracles for the unit tests. Nothing in
// here calls into the Smith-form code paths it is used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gerbeforge/groups.hpp"

namespace gf::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(lo, hi);
  return m;
}

inline GroupPtr group(const char* text) { return make_group(FgAbGroup::parse(text)); }

inline GroupElement random_element(const GroupPtr& g, long free_range = 5) {
  IntVector c(g->dimension());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer m = g->modulus(i);
    c[i] = m == 0 ? Integer(uniform(-free_range, free_range)) : Integer(uniform(0, m.get_si() - 1));
  }
  return GroupElement(g, std::move(c));
}

// Finite groups up to order 16, as cyclic decompositions.
inline std::vector<GroupPtr> small_group_battery(long max_order = 16) {
  std::vector<const char*> all = {"0",       "Z/2",     "Z/3",         "Z/4",     "Z/2+Z/2",
                                  "Z/5",     "Z/6",     "Z/7",         "Z/8",     "Z/2+Z/4",
                                  "Z/2+Z/2+Z/2", "Z/9", "Z/3+Z/3",     "Z/10",    "Z/12",
                                  "Z/2+Z/6", "Z/16",    "Z/4+Z/4",     "Z/2+Z/8", "Z/2+Z/2+Z/4"};
  std::vector<GroupPtr> out;
  for (auto t : all) {
    auto g = group(t);
    if (*g->order() <= max_order) out.push_back(g);
  }
  return out;
}

// k-th determinantal divisor: gcd of all k x k minors (brute force).
inline Integer minor_gcd(const IntMatrix& m, std::size_t k) {
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  Integer g = 0;
  std::vector<bool> rmask(m.rows()), cmask(m.cols());
  std::fill(rmask.begin(), rmask.begin() + k, true);
  do {
    std::vector<std::size_t> rs;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (rmask[i]) rs.push_back(i);
    std::fill(cmask.begin(), cmask.end(), false);
    std::fill(cmask.begin(), cmask.begin() + k, true);
    do {
      std::vector<std::size_t> cs;
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (cmask[j]) cs.push_back(j);
      Integer det = m.select_rows(rs).select_cols(cs).determinant();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    } while (std::prev_permutation(cmask.begin(), cmask.end()));
  } while (std::prev_permutation(rmask.begin(), rmask.end()));
  return g;
}

// Invariant factors from determinantal divisors, zeros for rank deficiency.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer dk = minor_gcd(m, k);
    if (dk == 0) {
      out.emplace_back(0);
      prev = 0;
      continue;
    }
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

}  // namespace gf::testing
