#include "doctest.h"
#include "gerbeforge/cech/fixtures.hpp"
#include "gerbeforge/error.hpp"
#include "gerbeforge/lifting/boundary.hpp"
#include "test_support.hpp"

using namespace gf;
using gf::testing::group;

namespace {

SystemPtr constant(const NervePtr& n, const char* g) {
  return make_system(CoefficientSystem::constant(n, group(g)));
}

Cochain from_values(const SystemPtr& s, int p, std::initializer_list<long> values) {
  IntVector v;
  for (long x : values) v.emplace_back(x);
  return Cochain::from_coordinates(s, p, v);
}

NervePtr pick_nerve(int trial, Rng& rng) {
  switch (trial % 5) {
    case 0: return make_nerve(CoverNerve::circle());
    case 1: return make_nerve(CoverNerve::full_simplex(3 + trial % 3));
    case 2: return make_nerve(CoverNerve::sphere());
    default: return make_nerve(random_nerve(4 + trial % 2, rng));
  }
}

}  // namespace

TEST_CASE("Heisenberg gerbe by hand on the 2-simplex") {
  auto n = make_nerve(CoverNerve::full_simplex(3));
  auto z2 = constant(n, "Z/2");
  HeisenbergExtension ext(z2, z2);
  // Edges 01, 02, 12 carry 1, 0, 1: closed mod 2.
  const Cochain p = from_values(z2, 1, {1, 0, 1});
  // e01 e12 e02^-1 = (1,1,0)(1,1,0) = (0,0,1).
  const Cochain a = boundary1(ext, ext.pair(p, p));
  REQUIRE(a.size() == 1);
  CHECK(a[0].coords() == make_vector({1}));
  CHECK(a == cup(p, p, ext.tensor()));
  // q = (0, 1, 1): e01 e12 e02^-1 = (1,0,0)(1,1,0)(0,-1,0) = (0,0,1), while
  // for (q, p) the only cross term is q01 (x) p12 = 0.
  const Cochain q = from_values(z2, 1, {0, 1, 1});
  CHECK(boundary1(ext, ext.pair(p, q))[0].coords() == make_vector({1}));
  CHECK(boundary1(ext, ext.pair(q, p))[0].is_zero());
}

TEST_CASE("boundary1 of the Heisenberg extension is the cup cocycle") {
  Rng rng(11);
  int with_triangles = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto nerve = pick_nerve(trial, rng);
    auto sa = make_system(random_system(nerve, rng));
    auto sb = make_system(random_system(nerve, rng));
    HeisenbergExtension ext(sa, sb);
    const Cochain p = random_cocycle(sa, 1, rng), q = random_cocycle(sb, 1, rng);
    const auto serial = boundary1(ext, ext.pair(p, q), Execution::serial);
    CHECK(serial == boundary1(ext, ext.pair(p, q), Execution::parallel));
    CHECK(serial == cup(p, q, ext.tensor(), Execution::serial));
    CHECK(is_cocycle(serial));
    if (nerve->count(2) > 0) ++with_triangles;

    const auto gerbe = heisenberg_gerbe(ext, p, q);
    CHECK(gerbe.equals_cup);
    CHECK(*gerbe.h2 == *Cohomology(ext.kernel(), 2).group());
    CHECK(gerbe.witness.has_value() == gerbe.cls.is_zero());
  }
  CHECK(with_triangles >= 15);
}

TEST_CASE("trivial torsor gives the trivial gerbe") {
  Rng rng(3);
  auto nerve = make_nerve(CoverNerve::sphere());
  HeisenbergExtension ext(make_system(random_system(nerve, rng)),
                          make_system(random_system(nerve, rng)));
  CHECK(boundary1(ext, Cochain::zero(ext.base(), 1)).is_zero());
}

TEST_CASE("changing the section changes the gerbe cocycle by a coboundary") {
  Rng rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    auto nerve = pick_nerve(trial + 1, rng);
    auto ext = std::make_shared<HeisenbergExtension>(make_system(random_system(nerve, rng)),
                                                     make_system(random_system(nerve, rng)));
    const Cochain g = ext->pair(random_cocycle(ext->a_system(), 1, rng),
                                random_cocycle(ext->b_system(), 1, rng));
    const auto shift = random_shift(ext->kernel(), 100 + trial);
    const PerturbedSection perturbed(ext, shift);
    // With s' = s + c(g), the lifts differ by c_e = shift(e, g_e).
    std::vector<GroupElement> c;
    for (std::size_t i = 0; i < g.size(); ++i) c.push_back(shift(g.face_id(i), g[i]));
    const Cochain delta = differential(Cochain(ext->kernel(), 1, std::move(c)));
    CHECK(boundary1(perturbed, g) == boundary1(*ext, g) + delta);
  }
}

TEST_CASE("abelian extension: boundary1 is the Bockstein") {
  Rng rng(9);
  auto nerve = make_nerve(CoverNerve::sphere());
  for (long n : {2, 3, 4}) {
    auto z = constant(nerve, "Z");
    auto zn = constant(nerve, ("Z/" + std::to_string(n)).c_str());
    auto times_n = SystemHom::build(z, z, [n](const Face&) { return IntMatrix{{n}}; });
    auto reduce = SystemHom::build(z, zn, [](const Face&) { return IntMatrix{{1}}; });
    AbelianExtension ext(times_n, reduce);
    for (int trial = 0; trial < 5; ++trial) {
      const Cochain g = random_cocycle(zn, 1, rng);
      const Cochain a = boundary1(ext, g);
      // Lift g to integers facewise; the Bockstein is d(lift) / n.
      std::vector<GroupElement> lift;
      for (std::size_t i = 0; i < g.size(); ++i)
        lift.push_back(ext.section(g.face_id(i), g[i]).front());
      const Cochain dl = differential(Cochain(z, 1, std::move(lift)));
      CHECK(push_forward(times_n, a) == dl);
      CHECK(is_cocycle(a));
    }
  }
  CHECK_THROWS_AS(AbelianExtension(SystemHom::identity(constant(nerve, "Z")),
                                   SystemHom::build(constant(nerve, "Z"), constant(nerve, "Z/2"),
                                                    [](const Face&) { return IntMatrix{{1}}; })),
                  ExactnessViolation);
}

TEST_CASE("boundary0 on the Moebius system is nonzero") {
  // Z twisted by -1 around the circle: H^0 = 0 and H^1 = Z/2, while the
  // reduction mod 2 is constant with a nonzero global section.
  auto z = make_system(mobius_system(group("Z")));
  auto z2 = make_system(mobius_system(group("Z/2")));
  CHECK(Cohomology(z, 0).group()->is_trivial());
  CHECK(*Cohomology(z, 1).group() == *group("Z/2"));
  auto times_two = SystemHom::build(z, z, [](const Face&) { return IntMatrix{{2}}; });
  auto reduce = SystemHom::build(z, z2, [](const Face&) { return IntMatrix{{1}}; });
  AbelianExtension ext(times_two, reduce);
  const Cochain one = from_values(z2, 0, {1, 1, 1});
  const Cochain a = boundary0(ext, one, Execution::serial);
  CHECK(a == boundary0(ext, one, Execution::parallel));
  CHECK(!is_coboundary(a).has_value());
  CHECK(!Cohomology(z, 1).class_of(a).is_zero());
  CHECK(boundary0(ext, Cochain::zero(z2, 0)).is_zero());
  CHECK_THROWS_AS(boundary0(ext, from_values(z2, 0, {1, 0, 1})), NotACocycle);
}

TEST_CASE("boundary0 of the Heisenberg extension") {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    auto nerve = pick_nerve(trial, rng);
    auto ext = std::make_shared<HeisenbergExtension>(make_system(random_system(nerve, rng)),
                                                     make_system(random_system(nerve, rng)));
    const Cochain g0 = ext->pair(random_cocycle(ext->a_system(), 0, rng),
                                 random_cocycle(ext->b_system(), 0, rng));
    const Cochain a = boundary0(*ext, g0);
    CHECK(is_cocycle(a));
    const PerturbedSection perturbed(ext, random_shift(ext->kernel(), trial));
    CHECK(is_coboundary(boundary0(perturbed, g0) - a).has_value());
  }
}

TEST_CASE("functoriality under pushforward") {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    auto nerve = pick_nerve(trial, rng);
    const SystemHom f = random_reduction(nerve, rng), g = random_reduction(nerve, rng);
    HeisenbergExtension source(f.source(), g.source()), target(f.target(), g.target());
    const Cochain p = random_cocycle(f.source(), 1, rng), q = random_cocycle(g.source(), 1, rng);
    const SystemHom fg = tensor_system_hom(f, g, source.tensor(), target.tensor());
    CHECK(push_forward(fg, boundary1(source, source.pair(p, q))) ==
          boundary1(target, target.pair(push_forward(f, p), push_forward(g, q))));
  }
}

TEST_CASE("coboundary input gives a witnessed trivial gerbe; bilinearity") {
  Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    auto nerve = pick_nerve(trial, rng);
    HeisenbergExtension ext(make_system(random_system(nerve, rng)),
                            make_system(random_system(nerve, rng)));
    const Cochain p = random_cocycle(ext.a_system(), 1, rng);
    const Cochain q = differential(Cochain::random(ext.b_system(), 0, rng, 3));
    const auto gerbe = heisenberg_gerbe(ext, p, q);
    CHECK(gerbe.cls.is_zero());
    REQUIRE(gerbe.witness.has_value());
    CHECK(differential(*gerbe.witness) == gerbe.cocycle);

    const Cochain q2 = random_cocycle(ext.b_system(), 1, rng);
    const Cochain q3 = random_cocycle(ext.b_system(), 1, rng);
    CHECK(boundary1(ext, ext.pair(p, q2 + q3)) ==
          boundary1(ext, ext.pair(p, q2)) + boundary1(ext, ext.pair(p, q3)));
  }
}

TEST_CASE("lifting input validation") {
  auto nerve = make_nerve(CoverNerve::full_simplex(3));
  auto z2 = constant(nerve, "Z/2");
  HeisenbergExtension ext(z2, z2);
  const Cochain open = from_values(z2, 1, {1, 0, 0});
  CHECK_THROWS_AS(boundary1(ext, ext.pair(open, open)), NotACocycle);
  CHECK_THROWS_AS(heisenberg_gerbe(ext, open, open), NotACocycle);
  CHECK_THROWS_AS(boundary1(ext, open), ParentMismatch);
  CHECK_THROWS_AS(boundary0(ext, Cochain::zero(ext.base(), 1)), ParentMismatch);
}
