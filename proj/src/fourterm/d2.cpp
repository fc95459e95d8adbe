#include "gerbeforge/fourterm/d2.hpp"

#include <map>

#include "gerbeforge/error.hpp"
#include "gerbeforge/lifting/boundary.hpp"
#include "gerbeforge/parallel.hpp"

namespace gf {
namespace {

Rng face_rng(std::uint64_t seed, std::size_t face) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(face), std::uint64_t{0x6a09e667f3bcc908}};
  return Rng(seq);
}

}  // namespace

LiftChoice random_lift_choice(const FourTermComplex& ft, std::uint64_t seed) {
  const auto& nerve = *ft.nerve();
  auto kernels = std::make_shared<std::map<std::size_t, Subgroup>>();
  for (std::size_t id : nerve.faces_of_dimension(0)) kernels->emplace(id, hom_kernel(ft.p().at(id)));
  LiftChoice choice;
  choice.x_offset = [kernels, seed](std::size_t v) {
    Rng rng = face_rng(seed, v);
    const Subgroup& k = kernels->at(v);
    return k.inclusion(random_element(k.group, rng, 4));
  };
  choice.l_offset = [iota = ft.iota(), a = ft.a(), seed](std::size_t e) {
    Rng rng = face_rng(seed ^ 0x9e3779b97f4a7c15ull, e);
    return iota.at(e)(random_element(a->group_at(e), rng, 4));
  };
  return choice;
}

D2Result d2(const FourTermComplex& ft, const Cochain& beta, Execution execution,
            const LiftChoice* choice) {
  if (beta.degree() != 0 || !same_system(beta.system(), ft.b()))
    throw ParentMismatch("d2: beta must be a 0-cochain of B");
  if (!is_cocycle(beta, execution)) throw NotACocycle("d2: beta is not a global section of B");
  const auto& nerve = *ft.nerve();
  const auto& l0 = *ft.l0();
  const auto& l1 = *ft.l1();

  const auto& vertices = nerve.faces_of_dimension(0);
  auto x = indexed_map<GroupElement>(vertices.size(), execution, [&](std::size_t pos) {
    const std::size_t v = vertices[pos];
    auto lift = preimage(ft.p().at(v), beta[pos]);
    if (!lift)
      throw NoLocalLift("d2: beta has no lift to L0 on " + face_to_string(nerve.face(v)));
    return choice ? *lift + choice->x_offset(v) : *lift;
  });

  const auto& edges = nerve.faces_of_dimension(1);
  auto l = indexed_map<GroupElement>(edges.size(), execution, [&](std::size_t pos) {
    const std::size_t e = edges[pos];
    const Face& f = nerve.face(e);
    const std::size_t i = nerve.position(nerve.id({f[0]})), j = nerve.position(nerve.id({f[1]}));
    const GroupElement c = l0.immediate(e, 1)(x[i]) - l0.immediate(e, 0)(x[j]);
    auto lift = preimage(ft.del().at(e), c);
    ensure(lift.has_value(), "d2: x_i - x_j is not in the image of L1 on " + face_to_string(f));
    return choice ? *lift + choice->l_offset(e) : *lift;
  });

  const auto& triangles = nerve.faces_of_dimension(2);
  auto a = indexed_map<GroupElement>(triangles.size(), execution, [&](std::size_t pos) {
    const std::size_t t = triangles[pos];
    const Face& f = nerve.face(t);
    auto edge = [&](std::size_t k) {
      return l1.immediate(t, k)(l[nerve.position(nerve.id(omit(f, k)))]);
    };
    // omit 2 -> ij, omit 0 -> jk, omit 1 -> ik
    const GroupElement sum = edge(2) + edge(0) - edge(1);
    auto back = preimage(ft.iota().at(t), sum);
    ensure(back.has_value(), "d2: l_ij + l_jk - l_ik is not in A on " + face_to_string(f));
    return *back;
  });

  Cochain cocycle(ft.a(), 2, std::move(a));
  const Cohomology h2(ft.a(), 2);
  GroupElement cls = h2.class_of(cocycle);
  std::optional<Cochain> witness;
  if (cls.is_zero()) {
    witness = is_coboundary(cocycle);
    ensure(witness.has_value(), "d2: zero class without a witness");
  }
  return {std::move(cocycle), h2.group(), std::move(cls), std::move(witness)};
}

FactoredD2 d2_factored(const FourTermComplex& ft, const MiddleImage& mid, const Cochain& beta,
                       Execution execution) {
  const AbelianExtension lower(mid.j, ft.p());
  const AbelianExtension upper(ft.iota(), mid.pi);
  Cochain torsor = boundary0(lower, beta, execution);
  Cochain gerbe = boundary1(upper, torsor, execution);
  GroupElement cls = Cohomology(ft.a(), 2).class_of(gerbe);
  return {std::move(torsor), std::move(gerbe), std::move(cls)};
}

FiberGroupoidReport fiber_groupoid_report(const FourTermComplex& ft, const Cochain& beta,
                                          const Face& face, std::size_t max_elements,
                                          std::size_t max_pairs) {
  if (beta.degree() != 0 || !same_system(beta.system(), ft.b()))
    throw ParentMismatch("fiber_groupoid_report: beta must be a 0-cochain of B");
  if (!is_cocycle(beta)) throw NotACocycle("fiber_groupoid_report: beta is not a global section");
  const auto& nerve = *ft.nerve();
  const std::size_t id = nerve.id(face);
  FiberGroupoidReport report;
  report.face = face;

  const Subgroup ker_del = hom_kernel(ft.del().at(id));
  report.automorphism_group = ker_del.group->to_string();
  report.automorphisms_match_a = *ker_del.group == *ft.a()->group_at(id);

  const GroupPtr& l0 = ft.l0()->group_at(id);
  const GroupPtr& l1 = ft.l1()->group_at(id);
  const auto small = [&](const GroupPtr& g) {
    return g->is_finite() && *g->order() <= static_cast<unsigned long>(max_elements);
  };
  if (!small(l0) || !small(l1)) return report;
  report.enumerated = true;

  const Face vertex{face.front()};
  const GroupElement target = ft.b()->restrict(vertex, face)(beta.at(vertex));

  std::vector<GroupElement> objects;
  for_each_element(l0, [&](const GroupElement& g) {
    if (ft.p().at(id)(g) == target) objects.push_back(g);
  });
  report.objects = Integer(static_cast<unsigned long>(objects.size()));

  // hits[k]: how many h in L1 have del(h) equal to the k-th element of L0.
  std::vector<unsigned long> hits(static_cast<std::size_t>(l0->order()->get_ui()), 0);
  for_each_element(l1, [&](const GroupElement& h) { ++hits[element_index(ft.del().at(id)(h))]; });
  report.automorphisms = Integer(hits[0]);

  std::size_t image_size = 0;
  for (unsigned long n : hits) image_size += n > 0;
  if (!objects.empty()) report.components = Integer(static_cast<unsigned long>(objects.size() / image_size));

  for (std::size_t u = 0; u < objects.size() && report.pairs_checked < max_pairs; ++u)
    for (std::size_t w = 0; w < objects.size() && report.pairs_checked < max_pairs; ++w) {
      ++report.pairs_checked;
      const unsigned long n = hits[element_index(objects[u] - objects[w])];
      if (n == 0) continue;
      ++report.nonempty_pairs;
      if (n != hits[0]) report.hom_sets_are_torsors = false;
    }
  return report;
}

}  // namespace gf
