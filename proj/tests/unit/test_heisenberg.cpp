#include <numeric>

#include "doctest.h"
#include "gerbeforge/error.hpp"
#include "gerbeforge/heisenberg/heisenberg.hpp"
#include "gerbeforge/heisenberg/verify.hpp"
#include "test_support.hpp"

using namespace gf;
using gf::testing::group;

namespace {

GroupElement el(const GroupPtr& g, std::initializer_list<long> c) { return GroupElement(g, make_vector(c)); }

void require_all(const std::vector<LawCheck>& laws) {
  for (const auto& l : laws) {
    INFO(l.law << " " << l.first_failure);
    CHECK(l.passed());
    CHECK(l.cases > 0);
  }
}

}  // namespace

TEST_CASE("Z/2 x Z/2 products from the group law") {
  auto z2 = group("Z/2");
  HeisenbergGroup h(z2, z2);
  auto t = h.tensor_group();
  REQUIRE(*t == FgAbGroup::cyclic(2));
  auto x = h.element(el(z2, {1}), el(z2, {0}), el(t, {0}));
  auto y = h.element(el(z2, {0}), el(z2, {1}), el(t, {0}));
  CHECK(h.mul(x, y) == h.element(el(z2, {1}), el(z2, {1}), el(t, {1})));
  CHECK(h.mul(y, x) == h.element(el(z2, {1}), el(z2, {1}), el(t, {0})));
  CHECK(h.mul(h.identity(), x) == x);

  auto w = h.element(el(z2, {1}), el(z2, {1}), el(t, {0}));
  CHECK(h.inv(w) == h.element(el(z2, {1}), el(z2, {1}), el(t, {1})));
  CHECK(h.inv(h.identity()) == h.identity());

  CHECK(h.cocycle(el(z2, {1}), el(z2, {0}), el(z2, {0}), el(z2, {1})) == el(t, {1}));
  CHECK(h.cocycle(el(z2, {1}), el(z2, {1}), el(z2, {0}), el(z2, {0})).is_zero());
  CHECK(h.alternation(el(z2, {1}), el(z2, {0}), el(z2, {0}), el(z2, {1})) == el(t, {1}));
}

TEST_CASE("product matches an independent integer model on cyclic groups") {
  // Oracle: A = Z/m, B = Z/n, A(x)B = Z/g with a(x)b' = a b' mod g times the
  // image of 1(x)1.
  for (long mm : {2, 3, 4, 6, 8})
    for (long nn : {2, 3, 4, 6, 9}) {
      auto a = group(("Z/" + std::to_string(mm)).c_str());
      auto b = group(("Z/" + std::to_string(nn)).c_str());
      HeisenbergGroup h(a, b);
      const long g = std::gcd(mm, nn);
      const auto unit = h.tensor()(el(a, {1}), el(b, {1}));
      for (long a1 = 0; a1 < mm; ++a1)
        for (long b2 = 0; b2 < nn; ++b2) {
          const auto got = h.cocycle(el(a, {a1}), el(b, {0}), el(a, {0}), el(b, {b2}));
          CHECK(got == unit.scaled((a1 * b2) % g));
        }
    }
}

TEST_CASE("group axioms: serial reference and parallel kernel agree") {
  for (auto [ta, tb] : std::vector<std::pair<const char*, const char*>>{
           {"Z/2", "Z/2"}, {"Z/2", "Z/3"}, {"Z/2+Z/2", "Z/2"}, {"Z/4", "Z/2"}}) {
    HeisenbergGroup h(group(ta), group(tb));
    AxiomOptions serial;
    serial.execution = Execution::serial;
    AxiomOptions parallel;
    auto rs = verify_group_axioms(h, serial);
    auto rp = verify_group_axioms(h, parallel);
    CHECK(rs.exhaustive);
    CHECK(rp.exhaustive);
    CHECK(rs.order == rp.order);
    require_all(rs.laws);
    require_all(rp.laws);
    CHECK(rs.laws.back().cases == rp.laws.back().cases);
    CHECK(rs.laws.back().cases == rs.order * rs.order * rs.order);
  }
}

TEST_CASE("group axioms: randomized mode for infinite and large groups") {
  HeisenbergGroup h(group("Z+Z/4"), group("Z^2"));
  AxiomOptions opt;
  opt.random_triples = 2000;
  auto r = verify_group_axioms(h, opt);
  CHECK_FALSE(r.exhaustive);
  require_all(r.laws);
  opt.execution = Execution::serial;
  auto r2 = verify_group_axioms(h, opt);
  CHECK(r2.laws.size() == r.laws.size());
  require_all(r2.laws);
}

TEST_CASE("extension laws hold exhaustively for |A|,|B| <= 4") {
  std::vector<const char*> battery = {"Z/2", "Z/3", "Z/4", "Z/2+Z/2"};
  for (auto ta : battery)
    for (auto tb : battery) {
      HeisenbergGroup h(group(ta), group(tb));
      auto serial = verify_extension_laws(h, Execution::serial);
      auto parallel = verify_extension_laws(h, Execution::parallel);
      require_all(parallel);
      REQUIRE(serial.size() == parallel.size());
      for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].cases == parallel[i].cases);
        CHECK(serial[i].failures == parallel[i].failures);
      }
    }
}

TEST_CASE("a broken law is reported, not hidden") {
  auto z2 = group("Z/2");
  HeisenbergGroup h(z2, z2);
  GroupHom id = GroupHom::identity(z2);
  HeisenbergHom good(h, h, id, id);
  CHECK(verify_hom_property(h, h, good, Execution::parallel).passed());
  auto bad = sweep("deliberately false", 10, Execution::parallel, [](std::uint64_t i) {
    return i % 3 == 1 ? std::optional<std::string>("boom") : std::nullopt;
  });
  CHECK(bad.failures == 3);
  CHECK(bad.first_failure == "case 1: boom");
}

TEST_CASE("functoriality of H(f,g)") {
  auto z4 = group("Z/4"), z2 = group("Z/2"), z6 = group("Z/6"), z3 = group("Z/3");
  HeisenbergGroup h46(z4, z6), h23(z2, z3), h22(z2, z2);
  GroupHom f(z4, z2, IntMatrix{{1}});   // reduction mod 2
  GroupHom g(z6, z3, IntMatrix{{1}});   // reduction mod 3
  HeisenbergHom m(h46, h23, f, g);
  CHECK(verify_hom_property(h46, h23, m, Execution::parallel).passed());

  HeisenbergHom ident(h46, h46, GroupHom::identity(z4), GroupHom::identity(z6));
  HeisenbergHom zero(h46, h23, GroupHom::zero(z4, z2), GroupHom::zero(z6, z3));
  for (const auto& a : all_elements(z4))
    for (const auto& b : all_elements(z6))
      for (const auto& t : all_elements(h46.tensor_group())) {
        auto x = h46.element(a, b, t);
        CHECK(ident(x) == x);
        CHECK(zero(x) == h23.identity());
      }

  // Composition: (Z/4,Z/6) -> (Z/2,Z/3) -> (Z/2,Z/3) via negation in B.
  GroupHom neg(z3, z3, IntMatrix{{2}});
  HeisenbergHom second(h23, h23, GroupHom::identity(z2), neg);
  HeisenbergHom composite(h46, h23, compose(GroupHom::identity(z2), f), compose(neg, g));
  for (int k = 0; k < 50; ++k) {
    auto x = h46.element(gf::testing::random_element(z4), gf::testing::random_element(z6),
                         gf::testing::random_element(h46.tensor_group()));
    CHECK(composite(x) == second(m(x)));
  }
  CHECK_THROWS_AS(HeisenbergHom(h22, h23, f, g), ParentMismatch);
}

TEST_CASE("Poonen-Rains group") {
  auto z2 = group("Z/2");
  PoonenRainsGroup ua(z2);
  auto t = ua.tensor_group();
  auto x = ua.element(el(z2, {1}), el(t, {0}));
  CHECK(ua.mul(x, x) == ua.element(el(z2, {0}), el(t, {1})));
  CHECK(ua.mul(ua.identity(), x) == x);
  for (auto ta : {"Z/2", "Z/3", "Z/4", "Z/2+Z/2", "Z/5", "Z/6", "Z/7", "Z/8", "Z/2+Z/4", "Z/9",
                  "Z/3+Z/3", "Z/2+Z/2+Z/2"}) {
    PoonenRainsGroup g(group(ta));
    require_all(verify_poonen_rains(g, Execution::parallel));
  }
}

TEST_CASE("parent checks") {
  HeisenbergGroup h(group("Z/2"), group("Z/3"));
  auto bad = HeisenbergElement{GroupElement::zero(group("Z/3")), GroupElement::zero(group("Z/3")),
                               GroupElement::zero(h.tensor_group())};
  CHECK_THROWS_AS(h.mul(bad, h.identity()), ParentMismatch);
  CHECK_THROWS_AS(h.element(bad.a, bad.b, bad.t), ParentMismatch);
}
