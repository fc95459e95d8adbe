#include "doctest.h"
#include "gerbeforge/cech/fixtures.hpp"
#include "gerbeforge/error.hpp"
#include "gerbeforge/fourterm/d2.hpp"
#include "gerbeforge/fourterm/library.hpp"
#include "test_support.hpp"

using namespace gf;
using gf::testing::group;

namespace {

SystemPtr constant(const NervePtr& n, const char* g) {
  return make_system(CoefficientSystem::constant(n, group(g)));
}

SystemHom scalar(const SystemPtr& s, const SystemPtr& t, long k) {
  return SystemHom::build(s, t, [k](const Face&) { return IntMatrix{{k}}; });
}

Cochain global_section(const SystemPtr& s, Rng& rng) {
  const Cohomology h0(s, 0);
  return h0.representative(random_element(h0.group(), rng, 3));
}

// Z -2-> Z -2-> Z/4 -> Z/2, constant on the nerve.
FourTermComplex doubling(const NervePtr& n) {
  auto z = constant(n, "Z"), z4 = constant(n, "Z/4"), z2 = constant(n, "Z/2");
  return FourTermComplex(scalar(z, z, 2), scalar(z, z4, 2), scalar(z4, z2, 1));
}

}  // namespace

TEST_CASE("splice") {
  auto n = make_nerve(CoverNerve::circle());
  auto z2 = constant(n, "Z/2"), z3 = constant(n, "Z/3");
  FourTermComplex degenerate(SystemHom::identity(z2), scalar(z2, z3, 0), SystemHom::identity(z3));
  const MiddleImage m = splice(degenerate);
  for (std::size_t id = 0; id < n->face_count(); ++id) CHECK(m.c->group_at(id)->is_trivial());

  const FourTermComplex ft = doubling(n);
  const MiddleImage mid = splice(ft);
  for (std::size_t id = 0; id < n->face_count(); ++id) {
    CHECK(*mid.c->group_at(id) == *group("Z/2"));
    CHECK(compose(mid.j.at(id), mid.pi.at(id)) == ft.del().at(id));
    CHECK(is_surjective(mid.pi.at(id)));
    CHECK(is_injective(mid.j.at(id)));
  }
}

TEST_CASE("exactness is validated with the face") {
  auto n = make_nerve(CoverNerve::circle());
  auto z = constant(n, "Z"), z4 = constant(n, "Z/4"), z2 = constant(n, "Z/2");
  try {
    FourTermComplex(scalar(z, z, 2), scalar(z, z4, 0), scalar(z4, z2, 1));
    FAIL("expected an exactness violation");
  } catch (const ExactnessViolation& e) {
    CHECK(std::string(e.what()).find("on face {0}") != std::string::npos);
  }
  CHECK_THROWS_AS(FourTermComplex(scalar(z, z, 2), scalar(z, z4, 2), scalar(z4, z2, 0)),
                  ExactnessViolation);
  CHECK_THROWS_AS(FourTermComplex(scalar(z, z, 0), scalar(z, z4, 2), scalar(z4, z2, 1)),
                  ExactnessViolation);
}

TEST_CASE("constant complexes have vanishing d2") {
  Rng rng(1);
  for (auto preset : {"circle", "sphere", "full_simplex:3"}) {
    const FourTermComplex ft = doubling(make_nerve(nerve_preset(preset)));
    const Cochain beta = global_section(ft.b(), rng);
    const auto r = d2(ft, beta);
    CHECK(r.cls.is_zero());
    REQUIRE(r.witness.has_value());
    CHECK(differential(*r.witness) == r.cocycle);
  }
}

TEST_CASE("Godement resolution is acyclic on the cover") {
  for (auto preset : {"circle", "sphere", "full_simplex:3", "two_chart"}) {
    auto n = make_nerve(nerve_preset(preset));
    for (auto g : {"Z/2", "Z", "Z/2+Z/3"}) {
      const SubSystem hat = godement(constant(n, g));
      CHECK(Cohomology(hat.system, 1).group()->is_trivial());
      CHECK(Cohomology(hat.system, 2).group()->is_trivial());
      for (std::size_t id = 0; id < n->face_count(); ++id) CHECK(is_injective(hat.inclusion.at(id)));
    }
  }
}

TEST_CASE("d2 on the sphere hits the generator of H^2(Z/2)") {
  auto sphere = make_nerve(CoverNerve::sphere());
  const FourTermComplex ft = godement_complex(constant(sphere, "Z/2"));
  const MiddleImage mid = splice(ft);
  const Cohomology h0(ft.b(), 0);
  bool hit = false;
  for (std::size_t k = 0; k < h0.group()->dimension(); ++k) {
    const Cochain beta = h0.representative(GroupElement::basis(h0.group(), k));
    const auto direct = d2(ft, beta, Execution::serial);
    CHECK(direct.cocycle == d2(ft, beta, Execution::parallel).cocycle);
    CHECK(*direct.h2 == *group("Z/2"));
    CHECK(direct.cls == d2_factored(ft, mid, beta).cls);
    hit = hit || !direct.cls.is_zero();
  }
  CHECK(hit);
}

TEST_CASE("d2 is independent of lifts, additive, and factors through C") {
  Rng rng(7);
  std::vector<SystemPtr> sources;
  auto sphere = make_nerve(CoverNerve::sphere());
  sources.push_back(constant(sphere, "Z/2"));
  sources.push_back(constant(sphere, "Z/3"));
  sources.push_back(make_system(gcd_system(sphere, {2, 4, 4, 0})));
  sources.push_back(constant(make_nerve(CoverNerve::full_simplex(3)), "Z/4"));
  sources.push_back(constant(make_nerve(CoverNerve::circle()), "Z"));
  for (const auto& a : sources) {
    const FourTermComplex ft = godement_complex(a);
    const MiddleImage mid = splice(ft);
    for (int trial = 0; trial < 3; ++trial) {
      const Cochain beta = global_section(ft.b(), rng), gamma = global_section(ft.b(), rng);
      const auto base = d2(ft, beta);
      const LiftChoice choice = random_lift_choice(ft, 40 + trial);
      const auto moved = d2(ft, beta, Execution::parallel, &choice);
      CHECK(moved.cls == base.cls);
      CHECK(is_coboundary(moved.cocycle - base.cocycle).has_value());
      CHECK(d2(ft, beta + gamma).cls == base.cls + d2(ft, gamma).cls);
      const FactoredD2 f = d2_factored(ft, mid, beta);
      CHECK(f.cls == base.cls);
      CHECK(is_cocycle(f.torsor));
    }
    CHECK(d2(ft, Cochain::zero(ft.b(), 0)).cocycle.is_zero());
  }
}

TEST_CASE("beta with a global lift has a witnessed trivial class") {
  Rng rng(8);
  const FourTermComplex ft = godement_complex(constant(make_nerve(CoverNerve::sphere()), "Z/2"));
  for (int trial = 0; trial < 5; ++trial) {
    const Cochain g = global_section(ft.l0(), rng);
    const auto r = d2(ft, push_forward(ft.p(), g));
    CHECK(r.cls.is_zero());
    REQUIRE(r.witness.has_value());
    CHECK(differential(*r.witness) == r.cocycle);
  }
}

TEST_CASE("fiber groupoid on a face") {
  auto n = make_nerve(CoverNerve::circle());
  auto z2 = constant(n, "Z/2"), z3 = constant(n, "Z/3");
  // Split 0 -> Z/2 -> Z/2 -0-> Z/3 -> Z/3 -> 0 with L0 = Z/3: objects are the
  // single lift of beta, automorphisms are A.
  FourTermComplex split(SystemHom::identity(z2), scalar(z2, z3, 0), SystemHom::identity(z3));
  auto r = fiber_groupoid_report(split, Cochain::zero(z3, 0), {0, 1});
  CHECK(r.enumerated);
  CHECK(*r.objects == 1);
  CHECK(*r.automorphisms == 2);
  CHECK(r.automorphisms_match_a);

  const FourTermComplex ft = godement_complex(constant(make_nerve(CoverNerve::sphere()), "Z/2"));
  Rng rng(2);
  const Cochain beta = global_section(ft.b(), rng);
  for (const Face& f : {Face{0}, Face{0, 1}, Face{1, 2, 3}}) {
    const auto rep = fiber_groupoid_report(ft, beta, f);
    REQUIRE(rep.enumerated);
    CHECK(*rep.objects > 0);
    CHECK(*rep.automorphisms == *ft.a()->group_at(f)->order());
    CHECK(rep.automorphisms_match_a);
    CHECK(rep.hom_sets_are_torsors);
    CHECK(rep.nonempty_pairs > 0);
    // Over a single face the groupoid is connected: L1 -> C is onto.
    CHECK(*rep.components == 1);
  }

  const FourTermComplex infinite = doubling(n);
  const auto symbolic = fiber_groupoid_report(infinite, Cochain::zero(infinite.b(), 0), {0});
  CHECK_FALSE(symbolic.enumerated);
  CHECK(symbolic.automorphism_group == "Z");
  CHECK(symbolic.automorphisms_match_a);
}

TEST_CASE("d2 input validation") {
  auto n = make_nerve(CoverNerve::circle());
  const FourTermComplex ft = doubling(n);
  CHECK_THROWS_AS(d2(ft, Cochain::zero(ft.a(), 0)), ParentMismatch);
  IntVector open = make_vector({1, 0, 0});
  CHECK_THROWS_AS(d2(ft, Cochain::from_coordinates(ft.b(), 0, open)), NotACocycle);
}

TEST_CASE("packaged library") {
  const auto names = library_names();
  CHECK(names.size() >= 10);
  std::size_t nonzero_entries = 0;
  for (const auto& entry : library()) {
    const auto v = verify_d2(entry.complex, entry.name, 11, 4);
    for (const auto& law : v.laws) {
      INFO(entry.name, ": ", law.law, " ", law.first_failure);
      CHECK(law.passed());
    }
    INFO(entry.name);
    CHECK((v.nonzero > 0) == entry.has_nonzero_d2);
    nonzero_entries += v.nonzero > 0;
  }
  CHECK(nonzero_entries >= 1);
  CHECK_THROWS_AS(library_complex("nope"), InvalidInput);
}
