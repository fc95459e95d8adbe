#include "gerbeforge/groups/smith.hpp"

#include <algorithm>

#include "gerbeforge/error.hpp"

namespace gf {
namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
int cmpabs(const Integer& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

// Working state for the reduction. Every row operation on d is mirrored on
// u (and inversely on u_inv); every column operation on d on v and v_inv.
struct Reducer {
  IntMatrix d, u, u_inv, v, v_inv;

  explicit Reducer(const IntMatrix& m)
      : d(m),
        u(IntMatrix::identity(m.rows())),
        u_inv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        v_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    d.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    d.swap_cols(a, b);
    v.swap_cols(a, b);
    v_inv.swap_rows(a, b);
  }
  // row[dst] += k row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
    u_inv.add_col_multiple(src, dst, -k);
  }
  // col[dst] += k col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
    v_inv.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t r) {
    d.negate_row(r);
    u.negate_row(r);
    u_inv.negate_col(r);
  }

  // Clears row t and column t outside the pivot. Returns false if a smaller
  // remainder appeared and the pivot has to be replaced.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    Integer q;
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (d(i, t) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
      if (q != 0) add_row(i, t, -q);
      if (d(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (d(t, j) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
      if (q != 0) add_col(j, t, -q);
      if (d(t, j) != 0) clean = false;
    }
    return clean;
  }

  void move_smallest_cross_entry_to_pivot(std::size_t t) {
    std::size_t best_i = t, best_j = t;
    const Integer* best = nullptr;
    for (std::size_t i = t + 1; i < d.rows(); ++i)
      if (d(i, t) != 0 && (!best || cmpabs(d(i, t), *best) < 0)) {
        best = &d(i, t);
        best_i = i;
        best_j = t;
      }
    for (std::size_t j = t + 1; j < d.cols(); ++j)
      if (d(t, j) != 0 && (!best || cmpabs(d(t, j), *best) < 0)) {
        best = &d(t, j);
        best_i = t;
        best_j = j;
      }
    swap_rows(t, best_i);
    swap_cols(t, best_j);
  }

  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    const Integer* best = nullptr;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        const Integer& x = d(i, j);
        if (x != 0 && (!best || cmpabs(x, *best) < 0)) {
          best = &x;
          pi = i;
          pj = j;
          if (cmpabs(x, 1) == 0) return true;
        }
      }
    return best != nullptr;
  }

  // Finds a row whose trailing block is not divisible by the pivot.
  std::optional<std::size_t> non_divisible_row(std::size_t t) const {
    const Integer& p = d(t, t);
    if (cmpabs(p, 1) == 0) return std::nullopt;
    for (std::size_t i = t + 1; i < d.rows(); ++i)
      for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d(i, j) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), p.get_mpz_t())) return i;
    return std::nullopt;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer r(m);
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    std::size_t pi = t, pj = t;
    if (!r.find_pivot(t, pi, pj)) break;
    r.swap_rows(t, pi);
    r.swap_cols(t, pj);
    for (;;) {
      if (!r.clear_cross(t)) {
        r.move_smallest_cross_entry_to_pivot(t);
        continue;
      }
      if (auto row = r.non_divisible_row(t)) {
        r.add_row(t, *row, 1);
        continue;
      }
      break;
    }
    if (r.d(t, t) < 0) r.negate_row(t);
  }
  SmithForm out;
  out.rank = t;
  out.d = std::move(r.d);
  out.u = std::move(r.u);
  out.v = std::move(r.v);
  out.u_inv = std::move(r.u_inv);
  out.v_inv = std::move(r.v_inv);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  const std::size_t n = m.cols();
  IntMatrix basis(n, n - snf.rank);
  for (std::size_t j = snf.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j - snf.rank) = snf.v(i, j);
  return basis;
}

LinearSystem::LinearSystem(IntMatrix m) : m_(std::move(m)), snf_(smith_normal_form(m_)) {}

std::optional<IntVector> LinearSystem::solve(std::span<const Integer> b) const {
  if (b.size() != m_.rows()) throw DimensionMismatch("solve: right-hand side has wrong length");
  IntVector c = snf_.u * b;
  IntVector y(m_.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf_.rank) {
      const Integer& di = snf_.diag(i);
      if (!mpz_divisible_p(c[i].get_mpz_t(), di.get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), di.get_mpz_t());
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf_.v * std::span<const Integer>(y);
}

std::optional<IntVector> solve(const IntMatrix& m, std::span<const Integer> b,
                               std::span<const Integer> moduli) {
  if (b.size() != m.rows() || moduli.size() != m.rows())
    throw DimensionMismatch("solve: matrix, right-hand side and moduli disagree in length");
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < moduli.size(); ++i)
    if (moduli[i] != 0) torsion_rows.push_back(i);
  IntMatrix extended(m.rows(), m.cols() + torsion_rows.size());
  extended.set_block(0, 0, m);
  for (std::size_t k = 0; k < torsion_rows.size(); ++k)
    extended(torsion_rows[k], m.cols() + k) = moduli[torsion_rows[k]];
  auto z = LinearSystem(std::move(extended)).solve(b);
  if (!z) return std::nullopt;
  z->resize(m.cols());
  return z;
}

}  // namespace gf
