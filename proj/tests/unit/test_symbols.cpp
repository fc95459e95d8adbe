#include <map>

#include "doctest.h"
#include "gerbeforge/error.hpp"
#include "gerbeforge/symbols/factor.hpp"
#include "gerbeforge/symbols/picard.hpp"
#include "gerbeforge/symbols/symbols.hpp"

using namespace gf;

namespace {

Poly poly(long p, std::vector<long> c) { return Poly(p, std::move(c)); }
RationalFunction rat(long p, std::vector<long> n, std::vector<long> d = {1}) {
  return RationalFunction(poly(p, std::move(n)), poly(p, std::move(d)));
}

// Irreducible iff no monic divisor of degree 1..n/2.
bool irreducible_by_trial_division(const Poly& f) {
  if (f.degree() < 1) return false;
  for (int d = 1; 2 * d <= f.degree(); ++d)
    for (const auto& g : monic_polynomials(f.p(), d))
      if ((f % g).is_zero()) return false;
  return true;
}

// Tame symbol as the ord-0 function (-1)^(ab) f^b / g^a read modulo v,
// without splitting off the uniformizer.
Poly tame_oracle(const Place& v, const RationalFunction& f, const RationalFunction& g) {
  const long a = ord(v, f), b = ord(v, g);
  RationalFunction h = f.pow(b) / g.pow(a);
  if ((a * b) % 2 != 0) h = h * RationalFunction::constant(f.p(), -1);
  if (v.is_infinite()) h = h.at_infinity_chart();
  const FiniteField k(v.residue_modulus());
  return k.mul(h.numerator(), k.inv(h.denominator()));
}

// Product of the Frobenius conjugates x^(p^i).
long norm_oracle(const FiniteField& k, const Poly& x) {
  Poly acc = k.one(), conj = k.reduce(x);
  for (int i = 0; i < k.degree(); ++i) {
    acc = k.mul(acc, conj);
    conj = k.pow(conj, k.p());
  }
  REQUIRE(acc.is_constant());
  return acc.coefficient(0);
}

}  // namespace

TEST_CASE("prime field and polynomial arithmetic") {
  CHECK_THROWS_AS(PrimeField(4), InvalidInput);
  CHECK_THROWS_AS(PrimeField(101), InvalidInput);
  CHECK(PrimeField(7).primitive_root() == 3);
  CHECK(PrimeField(2).primitive_root() == 1);
  const Poly f = poly(5, {1, 0, 1});  // t^2 + 1
  const Poly g = poly(5, {-2, 1});     // t - 2
  const auto [q, r] = divmod(f, g);
  CHECK(q * g + r == f);
  CHECK(r.is_zero());
  CHECK(q == poly(5, {2, 1}));  // t + 2 = t - 3
  CHECK(poly(3, {1, 2, 0, 0}).degree() == 1);
  CHECK(Poly::zero(3).degree() == -1);
  CHECK(poly(3, {1, 1}).reversed() == poly(3, {1, 1}));
  CHECK(poly(3, {0, 1, 2}).reversed() == poly(3, {2, 1}));
  const auto e = extended_gcd(poly(7, {1, 2, 3}), poly(7, {4, 0, 1, 1}));
  CHECK(e.s * poly(7, {1, 2, 3}) + e.t * poly(7, {4, 0, 1, 1}) == e.g);
  CHECK(pow_mod(Poly::t(3), Integer(3), poly(3, {1, 0, 1})) == poly(3, {0, 2}));
  CHECK(pow_mod(Poly::t(3), Integer(9), poly(3, {1, 0, 1})) == Poly::t(3));
  CHECK(monic_polynomials(3, 2).size() == 9);
  CHECK_THROWS_AS(poly(3, {1}) + poly(5, {1}), ParentMismatch);
  CHECK_THROWS_AS(divmod(f, Poly::zero(5)), InvalidInput);
}

TEST_CASE("irreducibility against trial division") {
  // Counts of monic irreducibles of degree 1..4.
  const std::map<long, std::vector<std::size_t>> expected{
      {2, {2, 1, 2, 3}}, {3, {3, 3, 8, 18}}, {5, {5, 10, 40, 150}}};
  for (const auto& [p, counts] : expected)
    for (int d = 1; d <= 4; ++d) {
      std::size_t found = 0;
      for (const auto& f : monic_polynomials(p, d)) {
        const bool oracle = irreducible_by_trial_division(f);
        CHECK(is_irreducible(f) == oracle);
        found += oracle;
      }
      CHECK(found == counts[d - 1]);
    }
}

TEST_CASE("factorization reassembles and has irreducible parts") {
  Rng rng(7);
  for (long p : {2L, 3L, 5L, 7L})
    for (int trial = 0; trial < 150; ++trial) {
      const int deg = static_cast<int>(uniform_int(rng, 1, 9));
      std::vector<long> c(deg + 1);
      for (auto& x : c) x = uniform_int(rng, 0, p - 1);
      c[deg] = uniform_int(rng, 1, p - 1);
      // Occasionally force repeated and p-th power factors.
      Poly f(p, c);
      if (trial % 5 == 0) f = f * f;
      if (trial % 7 == 0) f = f * (Poly::monomial(p, 1, static_cast<int>(p)) + Poly::constant(p, 1));
      Poly product = Poly::constant(p, f.lead());
      for (const auto& [g, m] : factor(f)) {
        INFO(f.to_string(), " factor ", g.to_string());
        CHECK(g.lead() == 1);
        CHECK(irreducible_by_trial_division(g));
        for (int k = 0; k < m; ++k) product = product * g;
      }
      CHECK(product == f);
    }
  // (t^2 + 1) = (t - 2)(t - 3) over F_5.
  const auto parts = factor(poly(5, {1, 0, 1}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].prime == poly(5, {-3, 1}));
  CHECK(parts[1].prime == poly(5, {-2, 1}));
  // t^3 + 1 = (t + 1)^3 over F_3.
  const auto cube = factor(poly(3, {1, 0, 0, 1}));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].multiplicity == 3);
}

TEST_CASE("residue fields and norms") {
  const FiniteField f9(poly(3, {1, 0, 1}));
  CHECK(f9.order() == 9);
  CHECK_THROWS_AS(FiniteField(poly(5, {1, 0, 1})), InvalidInput);
  for (const auto& x : monic_polynomials(3, 1)) {
    CHECK(f9.mul(x, f9.inv(x)).is_one());
    CHECK(f9.norm(x) == norm_oracle(f9, x));
  }
  const FiniteField f16(poly(2, {1, 1, 0, 0, 1}));
  for (const auto& x : monic_polynomials(2, 3)) CHECK(f16.norm(x) == norm_oracle(f16, x));
  CHECK(f16.norm(Poly::zero(2)) == 0);
}

TEST_CASE("rational functions") {
  const auto f = rat(5, {1, 0, 1}, {-2, 1});
  CHECK(f.numerator() == poly(5, {2, 1}));
  CHECK(f.denominator().is_one());
  CHECK((f * f.inverse()) == RationalFunction::constant(5, 1));
  CHECK(rat(3, {2}, {2, 2}).denominator() == poly(3, {1, 1}));
  CHECK(rat(3, {0, 1}).at_infinity_chart() == rat(3, {1}, {0, 1}));
  CHECK(rat(3, {1, 1}).one_minus() == rat(3, {0, 2}));
  CHECK_THROWS_AS(rat(3, {1}, {0}), InvalidInput);
  CHECK_THROWS_AS(RationalFunction::constant(3, 0).inverse(), InvalidInput);
}

TEST_CASE("ord examples") {
  const Place t3 = Place::finite(Poly::t(3));
  CHECK(ord(t3, rat(3, {0, 0, 1, 1})) == 2);
  CHECK(ord(Place::infinity(3), rat(3, {1}, {0, 1})) == 1);
  const auto f = RationalFunction(poly(3, {1, 0, 1})).pow(3) / rat(3, {-1, 1});
  CHECK(ord(Place::finite(poly(3, {1, 0, 1})), f) == 3);
  CHECK(ord(Place::finite(poly(3, {-1, 1})), f) == -1);
  CHECK(ord(Place::infinity(3), f) == -5);
  CHECK_THROWS_AS(ord(t3, RationalFunction::constant(3, 0)), InvalidInput);
  CHECK_THROWS_AS(Place::finite(poly(5, {1, 0, 1})), InvalidInput);
  CHECK_THROWS_AS(ord(Place::infinity(5), rat(3, {1})), ParentMismatch);
}

TEST_CASE("tame symbol examples") {
  const auto s = tame_symbol(Place::finite(Poly::t(5)), RationalFunction::t(5), RationalFunction::t(5));
  CHECK(s.value == Poly::constant(5, 4));
  const auto s2 = tame_symbol(Place::finite(Poly::t(3)), rat(3, {1, -1}), RationalFunction::t(3));
  CHECK(s2.value.is_one());
  CHECK_THROWS_AS(tame_symbol(Place::infinity(3), RationalFunction::constant(3, 0), rat(3, {1})),
                  InvalidInput);
  // Units at v: the symbol is 1.
  CHECK(tame_symbol(Place::finite(poly(3, {1, 0, 1})), rat(3, {1, 1}), rat(3, {2, 1})).value.is_one());
}

TEST_CASE("divisor examples") {
  CHECK(divisor(RationalFunction::constant(7, 3)).empty());
  Divisor t2;
  t2.add(Place::finite(Poly::t(2)), 1);
  t2.add(Place::infinity(2), -1);
  CHECK(divisor(RationalFunction::t(2)) == t2);
  Divisor expect;
  expect.add(Place::finite(poly(5, {-3, 1})), 1);
  expect.add(Place::infinity(5), -1);
  const auto d = divisor(rat(5, {1, 0, 1}, {-2, 1}));
  CHECK(d == expect);
  CHECK(d.degree() == 0);
  CHECK(d.to_string() == "[(t + 2)] - [inf]");
}

TEST_CASE("Weil reciprocity examples") {
  const auto r = weil_reciprocity(RationalFunction::t(3), rat(3, {1, -1}));
  CHECK(r.holds());
  CHECK(r.local.size() == 3);
  CHECK(weil_reciprocity(RationalFunction::constant(5, 2), rat(5, {1, 2, 3}, {4, 1})).holds());
}

TEST_CASE("symbol laws on a random battery") {
  Rng rng(99);
  std::size_t checked = 0;
  for (long p : {2L, 3L, 5L})
    for (int trial = 0; trial < 120; ++trial) {
      const auto f = random_rational(p, 4, rng);
      const auto g = random_rational(p, 4, rng);
      const auto h = random_rational(p, 4, rng);
      INFO("p=", p, " f=", f.to_string(), " g=", g.to_string(), " h=", h.to_string());
      const auto df = divisor(f);
      CHECK(df.degree() == 0);
      for (const auto& [v, n] : df.terms()) CHECK(ord(v, f) == n);
      const auto serial = weil_reciprocity(f, g, Execution::serial);
      CHECK(serial.holds());
      CHECK(weil_reciprocity(f, g, Execution::parallel).product == serial.product);

      std::vector<Place> places{Place::infinity(p)};
      const Divisor support = divisor(f * g * h) + divisor(f.one_minus().is_zero() ? f : f.one_minus());
      for (const auto& [v, n] : support.terms()) places.push_back(v);
      for (const auto& v : places) {
        const auto fg = tame_symbol(v, f, g);
        const auto& k = fg.field;
        CHECK(fg.value == tame_oracle(v, f, g));
        CHECK(k.mul(fg.value, tame_symbol(v, g, f).value).is_one());
        CHECK(tame_symbol(v, f * h, g).value == k.mul(fg.value, tame_symbol(v, h, g).value));
        CHECK(tame_symbol(v, f, g * h).value == k.mul(fg.value, tame_symbol(v, f, h).value));
        if (!f.one_minus().is_zero()) CHECK(tame_symbol(v, f, f.one_minus()).value.is_one());
        ++checked;
      }
    }
  CHECK(checked > 1000);
}

TEST_CASE("divisor torsor cocycles on the projective line") {
  for (long p : {2L, 3L, 5L}) {
    const auto units = std::make_shared<const UnitSystem>(p);
    const Place zero = Place::finite(Poly::t(p)), inf = Place::infinity(p);
    const auto trivial = divisor_torsor_cocycle(Divisor(), *units);
    CHECK(trivial.g01 == RationalFunction::constant(p, 1));
    CHECK(trivial.cocycle.is_zero());

    Divisor principal;
    principal.add(zero, 1);
    principal.add(inf, -1);
    const auto t_div = divisor_torsor_cocycle(principal, *units);
    CHECK(t_div.degree == 0);
    CHECK(t_div.cls.is_zero());

    Divisor point;
    point.add(zero, 1);
    const auto gen = divisor_torsor_cocycle(point, *units);
    CHECK(gen.g01 == RationalFunction::t(p));
    CHECK(gen.degree == 1);
    CHECK(*gen.cls.parent() == *make_group(FgAbGroup::free(1)));

    Rng rng(static_cast<std::uint64_t>(p));
    std::vector<Place> support{zero, inf};
    for (int d = 1; d <= 3; ++d)
      for (const auto& f : monic_polynomials(p, d))
        if (is_irreducible(f) && support.size() < 9) support.push_back(Place::finite(f));
    const DivisorSequence seq(units, support);
    auto random_divisor = [&] {
      Divisor out;
      for (const auto& v : support) out.add(v, uniform_int(rng, -3, 3));
      return out;
    };
    for (int trial = 0; trial < 40; ++trial) {
      const Divisor a = random_divisor(), b = random_divisor();
      const auto ca = divisor_torsor_cocycle(a, *units), cb = divisor_torsor_cocycle(b, *units);
      INFO("a=", a.to_string(), " b=", b.to_string());
      CHECK(ca.degree == a.degree());
      CHECK(ca.g01 == RationalFunction::t(p).pow(a.degree()));
      CHECK(divisor_torsor_cocycle(a + b, *units).cocycle == baer_sum(ca.cocycle, cb.cocycle));
      // Local equations have divisor D on each chart.
      const Divisor d0 = divisor(ca.f0), d1 = divisor(ca.f1);
      for (const auto& v : support) {
        if (!v.is_infinite()) CHECK(d0.coefficient(v) == a.coefficient(v));
        if (!(v == zero)) CHECK(d1.coefficient(v) == a.coefficient(v));
      }
      // Same class through boundary0 of O^* -> K_S^* -> Div_S.
      CHECK(units->h1().class_of(seq.torsor_of(a)) == ca.cls);
    }
    Divisor outside;
    for (const auto& f : monic_polynomials(p, 4))
      if (outside.empty() && is_irreducible(f)) outside.add(Place::finite(f), 1);
    CHECK_THROWS_AS(seq.global_section(outside), InvalidInput);
    CHECK_THROWS_AS(DivisorSequence(units, {inf}), InvalidInput);
    CHECK_THROWS_AS(units->overlap_unit(rat(p, {1, 1})), InvalidInput);
  }
}
