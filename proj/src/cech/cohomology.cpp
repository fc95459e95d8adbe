#include "gerbeforge/cech/cohomology.hpp"

#include "gerbeforge/error.hpp"

namespace gf {
namespace {

// Integer vectors x with d_p x = 0 modulo the torsion of C^{p+1}.
IntMatrix cycle_generators(const CoefficientSystem& s, int p) {
  const std::size_t n = s.cochain_dimension(p);
  if (p >= CoverNerve::max_dimension || s.cochain_dimension(p + 1) == 0)
    return IntMatrix::identity(n);
  const IntMatrix d = differential_matrix(s, p);
  const IntMatrix kernel = integer_kernel(d.hstack(s.relation_matrix(p + 1)));
  return kernel.block(0, 0, n, kernel.cols());
}

IntMatrix boundary_generators(const CoefficientSystem& s, int p) {
  if (p == 0) return IntMatrix(s.cochain_dimension(0), 0);
  return differential_matrix(s, p - 1);
}

Subquotient make_subquotient(const CoefficientSystem& s, int p) {
  if (p < 0 || p > 2) throw InvalidInput("cohomology degree must be 0, 1 or 2");
  IntMatrix rel = s.relation_matrix(p);
  if (rel.rows() != s.cochain_dimension(p)) rel = IntMatrix(s.cochain_dimension(p), 0);
  return Subquotient(std::move(rel), cycle_generators(s, p), boundary_generators(s, p));
}

}  // namespace

Cohomology::Cohomology(SystemPtr system, int degree)
    : system_(std::move(system)), degree_(degree), subquotient_(make_subquotient(*system_, degree)) {}

GroupElement Cohomology::class_of(const Cochain& c) const {
  if (c.degree() != degree_ || !same_system(c.system(), system_))
    throw ParentMismatch("Cohomology::class_of: cochain of another system or degree");
  const auto cls = subquotient_.class_of(c.coordinates());
  if (!cls) throw NotACocycle("Cohomology::class_of: the cochain is not closed");
  return *cls;
}

Cochain Cohomology::representative(const GroupElement& cls) const {
  require_parent(cls, group(), "Cohomology::representative");
  return Cochain::from_coordinates(system_, degree_, subquotient_.representative(cls));
}

std::optional<Cochain> is_coboundary(const Cochain& c) {
  if (c.degree() < 1) throw InvalidInput("is_coboundary: degree must be at least 1");
  if (!is_cocycle(c)) throw NotACocycle("is_coboundary: input is not a cocycle");
  const auto& s = *c.system();
  const IntMatrix d = differential_matrix(s, c.degree() - 1);
  const IntVector b = c.coordinates();
  const IntVector moduli = s.moduli(c.degree());
  const auto x = solve(d, b, moduli);
  if (!x) return std::nullopt;
  Cochain witness = Cochain::from_coordinates(c.system(), c.degree() - 1, *x);
  ensure(differential(witness) == c, "is_coboundary: witness does not reproduce the cocycle");
  return witness;
}

}  // namespace gf
