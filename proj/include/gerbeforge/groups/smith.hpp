#pragma once

#include <optional>

#include "gerbeforge/groups/int_matrix.hpp"

namespace gf {

// u * m * v == d with u, v unimodular and d diagonal, d(0,0) | d(1,1) | ...,
// all diagonal entries nonnegative. The inverses of u and v are tracked
// alongside so that callers can move between bases without re-inverting.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;
  std::size_t rank = 0;

  const Integer& diag(std::size_t i) const { return d(i, i); }
};

SmithForm smith_normal_form(const IntMatrix& m);

// Columns form a Z-basis of {x : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Exact integer solver for m x = b with m factored once.
class LinearSystem {
 public:
  explicit LinearSystem(IntMatrix m);

  std::optional<IntVector> solve(std::span<const Integer> b) const;
  const IntMatrix& matrix() const { return m_; }

 private:
  IntMatrix m_;
  SmithForm snf_;
};

// Solves m x = b componentwise modulo the per-row annihilators; a zero
// annihilator means equality over Z. Returns nullopt when no integer
// solution exists.
std::optional<IntVector> solve(const IntMatrix& m, std::span<const Integer> b,
                               std::span<const Integer> moduli);

}  // namespace gf
