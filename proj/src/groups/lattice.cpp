#include "gerbeforge/groups/lattice.hpp"

#include "gerbeforge/error.hpp"

namespace gf {

Presentation present(std::size_t generators, const IntMatrix& relations) {
  if (relations.rows() != generators)
    throw DimensionMismatch("present: relation columns must have one entry per generator");
  SmithForm snf = smith_normal_form(relations);
  std::vector<std::size_t> kept;
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;
  for (std::size_t i = 0; i < generators; ++i) {
    if (i < snf.rank) {
      const Integer& di = snf.diag(i);
      if (di == 1) continue;
      torsion.push_back(di);
    } else {
      ++free_rank;
    }
    kept.push_back(i);
  }
  Presentation out;
  out.group = make_group(FgAbGroup(torsion, free_rank));
  out.to_normal = snf.u.select_rows(kept);
  for (std::size_t r = 0; r < torsion.size(); ++r)
    for (std::size_t c = 0; c < out.to_normal.cols(); ++c)
      mpz_fdiv_r(out.to_normal(r, c).get_mpz_t(), out.to_normal(r, c).get_mpz_t(),
                 torsion[r].get_mpz_t());
  out.from_normal = snf.u_inv.select_cols(kept);
  return out;
}

namespace {

IntMatrix cycle_relations(const IntMatrix& relations, const IntMatrix& cycles,
                          const IntMatrix& boundaries) {
  IntMatrix stacked = cycles.hstack(boundaries).hstack(relations);
  IntMatrix kernel = integer_kernel(stacked);
  return kernel.block(0, 0, cycles.cols(), kernel.cols());
}

}  // namespace

Subquotient::Subquotient(IntMatrix relations, IntMatrix cycles, IntMatrix boundaries)
    : relations_(std::move(relations)),
      cycles_(std::move(cycles)),
      presentation_(present(cycles_.cols(), cycle_relations(relations_, cycles_, boundaries))),
      membership_(cycles_.hstack(relations_)) {
  if (boundaries.rows() != cycles_.rows() || relations_.rows() != cycles_.rows())
    throw DimensionMismatch("Subquotient: ambient dimensions disagree");
}

std::optional<GroupElement> Subquotient::class_of(std::span<const Integer> x) const {
  auto sol = membership_.solve(x);
  if (!sol) return std::nullopt;
  sol->resize(cycles_.cols());
  return GroupElement(presentation_.group, presentation_.to_normal * std::span<const Integer>(*sol));
}

IntVector Subquotient::representative(const GroupElement& cls) const {
  require_parent(cls, presentation_.group, "Subquotient::representative");
  IntVector c = presentation_.from_normal * std::span<const Integer>(cls.coords());
  return cycles_ * std::span<const Integer>(c);
}

}  // namespace gf
