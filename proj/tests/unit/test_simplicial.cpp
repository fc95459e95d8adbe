#include "doctest.h"
#include "gerbeforge/error.hpp"
#include "gerbeforge/simplicial/alexander_whitney.hpp"
#include "gerbeforge/simplicial/normalized.hpp"
#include "test_support.hpp"

using namespace gf;
using gf::testing::group;

namespace {

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

TEST_CASE("monotone surjections") {
  // [n] ->> [i] is a choice of the i places among n where the value climbs.
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) CHECK(static_cast<long>(surjections(n, i).size()) == binomial(n, i));
  CHECK(surjections(2, 1) == std::vector<Monotone>{{0, 0, 1}, {0, 1, 1}});
  CHECK(surjections(1, 2).empty());
  CHECK(after_coface({0, 1, 1}, 0) == Monotone{1, 1});
  CHECK(after_codegeneracy({0, 1}, 1) == Monotone{0, 1, 1});
}

TEST_CASE("levels of K(M, i)") {
  auto m = group("Z/6");
  const EilenbergMacLane k2(m, 2, 4);
  CHECK(*k2.object().level(2) == *m);
  CHECK(k2.object().level(0)->is_trivial());
  CHECK(k2.object().level(1)->is_trivial());
  const EilenbergMacLane k1(m, 1, 4);
  CHECK(k1.object().level(0)->is_trivial());
  CHECK(*k1.object().level(2) == *group("Z/6+Z/6"));
  CHECK(*k1.object().level(4) == *group("Z/6+Z/6+Z/6+Z/6"));
  CHECK_THROWS_AS(EilenbergMacLane(m, 3, 4), InvalidInput);
  CHECK_THROWS_AS(EilenbergMacLane(m, 1, 5), InvalidInput);
}

TEST_CASE("simplicial identities and Dold-Kan round trip") {
  for (auto g : {"Z", "Z/2", "Z/4", "Z/2+Z/2", "Z/6", "Z/3+Z", "Z^2"}) {
    for (int i : {1, 2}) {
      const auto checks = verify_dold_kan(group(g), i, 4);
      for (const auto& c : checks) {
        INFO(g, " i=", i, ": ", c.law, " ", c.first_failure);
        CHECK(c.passed());
        CHECK(c.cases > 0);
      }
    }
  }
}

TEST_CASE("constant and product simplicial groups") {
  auto m = group("Z/2+Z");
  const auto c = constant_simplicial(m, 4);
  CHECK(all_passed(check_simplicial_identities(c)));
  const NormalizedComplex n(c);
  CHECK(*n.homology(0) == *m);
  for (int d = 1; d < 4; ++d) CHECK(n.homology(d)->is_trivial());

  const EilenbergMacLane ka(group("Z/2"), 1, 3), kb(group("Z/3"), 1, 3);
  const auto p = product(ka.object(), kb.object());
  CHECK(all_passed(check_simplicial_identities(p)));
  CHECK(*NormalizedComplex(p).homology(1) == *group("Z/6"));
}

TEST_CASE("a broken face map is caught") {
  auto m = group("Z/3");
  const EilenbergMacLane k(m, 1, 3);
  const auto& x = k.object();
  std::vector<GroupPtr> levels;
  std::vector<std::vector<GroupHom>> faces(4), degens(4);
  for (int n = 0; n <= 3; ++n) {
    levels.push_back(x.level(n));
    for (int j = 0; n > 0 && j <= n; ++j) faces[n].push_back(x.face(n, j));
    for (int j = 0; n < 3 && j <= n; ++j) degens[n].push_back(x.degeneracy(n, j));
  }
  faces[2][1] = faces[2][0];
  const SimplicialAbelianGroup broken(levels, faces, degens);
  CHECK_FALSE(all_passed(check_simplicial_identities(broken)));
}

TEST_CASE("aw cup by hand") {
  auto z2 = group("Z/2");
  const AwCup aw(z2, z2);
  const GroupElement one(z2, make_vector({1})), zero = GroupElement::zero(z2);
  // ((1, .), (., 1)) -> 1 and ((a, b), (0, 0)) -> 0.
  CHECK(aw.value(AwCup::bar(aw.k_a(), one, zero), AwCup::bar(aw.k_b(), zero, one)).coords() ==
        make_vector({1}));
  CHECK(aw.value(AwCup::bar(aw.k_a(), one, zero), AwCup::bar(aw.k_b(), one, zero)).is_zero());
  CHECK(*aw(AwCup::bar(aw.k_a(), one, one), AwCup::bar(aw.k_b(), one, one)).parent() ==
        *aw.k_ab().object().level(2));
}

TEST_CASE("aw cup agrees with an integer model on cyclic groups") {
  // On Z/m x Z/n the cup is a * b' mod gcd(m, n).
  for (long m : {2, 3, 4, 6})
    for (long n : {2, 4, 5, 6}) {
      auto a = group(("Z/" + std::to_string(m)).c_str()), b = group(("Z/" + std::to_string(n)).c_str());
      const AwCup aw(a, b);
      const long g = std::gcd(m, n);
      for (long x1 = 0; x1 < m; ++x1)
        for (long x2 = 0; x2 < m; ++x2)
          for (long y2 = 0; y2 < n; ++y2) {
            const GroupElement v =
                aw.value(AwCup::bar(aw.k_a(), GroupElement(a, make_vector({x1})), GroupElement(a, make_vector({x2}))),
                         AwCup::bar(aw.k_b(), GroupElement::zero(b), GroupElement(b, make_vector({y2}))));
            const long expect = x1 * y2 % g;
            if (g == 1) {
              CHECK(v.is_zero());
            } else {
              CHECK(v.coords() == make_vector({expect}));
            }
          }
    }
}

TEST_CASE("aw cup equals the Heisenberg cocycle over the battery") {
  const auto battery = gf::testing::small_group_battery(8);
  std::size_t exhaustive = 0;
  for (const auto& a : battery)
    for (const auto& b : battery) {
      Prop34Options opt;
      opt.execution = (exhaustive % 2 == 0) ? Execution::parallel : Execution::serial;
      const auto checks = verify_aw_cup(a, b, opt);
      const auto pairs = a->order()->get_ui() * b->order()->get_ui();
      CHECK(checks[1].cases == pairs * pairs);
      for (const auto& c : checks) {
        INFO(a->to_string(), " x ", b->to_string(), ": ", c.first_failure);
        CHECK(c.passed());
      }
      ++exhaustive;
    }
  CHECK(exhaustive == battery.size() * battery.size());

  Prop34Options random;
  random.random_cases = 300;
  const auto big = verify_aw_cup(group("Z/16+Z/4"), group("Z/12"), random);
  CHECK(big[1].law.find("random") != std::string::npos);
  CHECK(all_passed(big));
}
