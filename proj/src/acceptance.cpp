#include "gerbeforge/acceptance.hpp"

#include <chrono>
#include <map>

#include "gerbeforge/cech/fixtures.hpp"
#include "gerbeforge/error.hpp"
#include "gerbeforge/fourterm/library.hpp"
#include "gerbeforge/heisenberg/verify.hpp"
#include "gerbeforge/lifting/boundary.hpp"
#include "gerbeforge/simplicial/alexander_whitney.hpp"
#include "gerbeforge/symbols/factor.hpp"
#include "gerbeforge/symbols/picard.hpp"
#include "gerbeforge/symbols/symbols.hpp"

namespace gf {
namespace {

using Fail = std::optional<std::string>;

// Accumulates checks of the same law from many instances into one line.
class LawTable {
 public:
  void add(const LawCheck& c, const std::string& instance) {
    auto [it, fresh] = index_.try_emplace(c.law, laws_.size());
    if (fresh) laws_.push_back(LawCheck{c.law, 0, 0, {}});
    LawCheck& into = laws_[it->second];
    into.cases += c.cases;
    into.failures += c.failures;
    if (into.first_failure.empty() && !c.first_failure.empty())
      into.first_failure = instance + ": " + c.first_failure;
  }
  void add_all(const std::vector<LawCheck>& cs, const std::string& instance) {
    for (const auto& c : cs) add(c, instance);
  }
  void require(const std::string& law, bool ok, const std::string& message) {
    add(LawCheck{law, 1, ok ? 0u : 1u, ok ? "" : message}, "summary");
  }
  std::vector<LawCheck> take() { return std::move(laws_); }

 private:
  std::vector<LawCheck> laws_;
  std::map<std::string, std::size_t> index_;
};

Rng case_rng(std::uint64_t seed, std::uint64_t criterion, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(criterion), static_cast<std::uint32_t>(index)};
  return Rng(seq);
}

GroupPtr named(const std::string& text) { return make_group(FgAbGroup::parse(text)); }

CriterionResult heisenberg_axioms(const AcceptanceOptions& opt) {
  CriterionResult r{1, "Heisenberg group axioms, exhaustive over {Z/2, Z/3, Z/4, Z/2+Z/2, Z/6}^2", {}, {}, 0, 10};
  const std::vector<std::string> names{"Z/2", "Z/3", "Z/4", "Z/2+Z/2", "Z/6"};
  LawTable table;
  AxiomOptions ax;
  ax.execution = opt.execution;
  ax.exhaustive_order = 1 << 12;
  ax.seed = opt.seed;
  std::uint64_t pairs = 0, largest = 0;
  bool exhaustive = true;
  for (const auto& a : names)
    for (const auto& b : names) {
      const HeisenbergGroup h(named(a), named(b));
      const AxiomReport rep = verify_group_axioms(h, ax);
      table.add_all(rep.laws, "H(" + a + ", " + b + ")");
      exhaustive = exhaustive && rep.exhaustive;
      largest = std::max(largest, rep.order);
      ++pairs;
    }
  table.require("every pair swept exhaustively", exhaustive, "a pair fell back to random triples");
  r.laws = table.take();
  r.facts = {{"pairs", std::to_string(pairs)}, {"largest |H|", std::to_string(largest)}};
  return r;
}

CriterionResult boundary_is_cup(const AcceptanceOptions& opt) {
  CriterionResult r{2, "boundary1 of the Heisenberg extension equals the cup cocycle", {}, {}, 0, 30};
  constexpr int configs = 30;
  std::uint64_t triangles = 0, circle = 0, simplex = 0;
  LawTable table;
  table.add(sweep("boundary1(p, q) == p cup q componentwise", configs, Execution::serial,
                  [&](std::uint64_t i) -> Fail {
                    Rng rng = case_rng(opt.seed, 2, i);
                    const auto nerve = fixture_nerve(static_cast<int>(i), rng);
                    if (*nerve == CoverNerve::circle()) ++circle;
                    if (i % 5 == 1) ++simplex;
                    if (nerve->count(2) > 0) ++triangles;
                    auto sa = make_system(random_system(nerve, rng));
                    auto sb = make_system(random_system(nerve, rng));
                    const HeisenbergExtension ext(sa, sb);
                    const Cochain p = random_cocycle(sa, 1, rng), q = random_cocycle(sb, 1, rng);
                    const Cochain lifted = boundary1(ext, ext.pair(p, q), opt.execution);
                    if (!(lifted == cup(p, q, ext.tensor(), opt.execution)))
                      return "configuration " + std::to_string(i) + " differs";
                    if (!(lifted == boundary1(ext, ext.pair(p, q), Execution::serial)))
                      return "serial and parallel boundary1 differ";
                    return std::nullopt;
                  }),
            "configurations");
  table.require("configurations include circle and full simplex", circle > 0 && simplex > 0,
                "missing circle or full simplex nerve");
  r.laws = table.take();
  r.facts = {{"configurations", std::to_string(configs)},
             {"with triangles", std::to_string(triangles)},
             {"circle", std::to_string(circle)},
             {"full simplex", std::to_string(simplex)}};
  return r;
}

CriterionResult functoriality(const AcceptanceOptions& opt) {
  CriterionResult r{3, "functoriality under pushforward and triviality witnesses", {}, {}, 0, 60};
  constexpr int cases = 120;
  LawTable table;
  table.add(sweep("push(f (x) g) boundary1(p, q) == boundary1(f p, g q)", cases, Execution::serial,
                  [&](std::uint64_t i) -> Fail {
                    Rng rng = case_rng(opt.seed, 3, i);
                    const auto nerve = fixture_nerve(static_cast<int>(i), rng);
                    const SystemHom f = random_reduction(nerve, rng), g = random_reduction(nerve, rng);
                    const HeisenbergExtension source(f.source(), g.source()), target(f.target(), g.target());
                    const Cochain p = random_cocycle(f.source(), 1, rng), q = random_cocycle(g.source(), 1, rng);
                    const SystemHom fg = tensor_system_hom(f, g, source.tensor(), target.tensor());
                    const Cochain left = push_forward(fg, boundary1(source, source.pair(p, q), opt.execution));
                    const Cochain right = boundary1(target, target.pair(push_forward(f, p), push_forward(g, q)),
                                                    opt.execution);
                    if (!(left == right)) return "cocycles differ";
                    return std::nullopt;
                  }),
            "pushforward");
  table.add(sweep("a coboundary input gives a witnessed trivial gerbe", cases, Execution::serial,
                  [&](std::uint64_t i) -> Fail {
                    Rng rng = case_rng(opt.seed, 30, i);
                    const auto nerve = fixture_nerve(static_cast<int>(i), rng);
                    const HeisenbergExtension ext(make_system(random_system(nerve, rng)),
                                                  make_system(random_system(nerve, rng)));
                    Cochain p = random_cocycle(ext.a_system(), 1, rng);
                    Cochain q = differential(Cochain::random(ext.b_system(), 0, rng, 3));
                    if (i % 2 == 1) {
                      p = differential(Cochain::random(ext.a_system(), 0, rng, 3));
                      q = random_cocycle(ext.b_system(), 1, rng);
                    }
                    const auto gerbe = heisenberg_gerbe(ext, p, q, opt.execution);
                    if (!gerbe.cls.is_zero()) return "nonzero class";
                    const auto witness = is_coboundary(gerbe.cup);
                    if (!witness || !(differential(*witness) == gerbe.cup)) return "no witness for the cup cocycle";
                    if (!gerbe.witness || !(differential(*gerbe.witness) == gerbe.cocycle))
                      return "gerbe report carries no witness";
                    return std::nullopt;
                  }),
            "triviality");
  r.laws = table.take();
  r.facts = {{"pushforward cases", std::to_string(cases)}, {"triviality cases", std::to_string(cases)}};
  return r;
}

CriterionResult alexander_whitney(const AcceptanceOptions& opt) {
  CriterionResult r{4, "Alexander-Whitney cup equals the Heisenberg cocycle; Dold-Kan round trip", {}, {}, 0, 30};
  const auto battery = group_battery(8);
  LawTable table;
  Prop34Options p34;
  p34.execution = opt.execution;
  p34.exhaustive_order = 64;
  p34.seed = opt.seed;
  std::uint64_t pairs = 0;
  bool exhaustive = true;
  for (const auto& a : battery)
    for (const auto& b : battery) {
      const auto checks = verify_aw_cup(a, b, p34);
      const std::uint64_t n = a->order()->get_ui() * b->order()->get_ui();
      exhaustive = exhaustive && checks.at(1).cases == n * n;
      table.add_all(checks, a->to_string() + " x " + b->to_string());
      ++pairs;
    }
  table.require("aw sweep exhaustive on every pair", exhaustive, "a pair was sampled");
  auto modules = battery;
  modules.push_back(named("Z"));
  modules.push_back(named("Z/3+Z"));
  for (const auto& m : modules)
    for (int i : {1, 2}) table.add_all(verify_dold_kan(m, i, 4), "K(" + m->to_string() + ", " + std::to_string(i) + ")");
  r.laws = table.take();
  r.facts = {{"group pairs", std::to_string(pairs)}, {"Dold-Kan modules", std::to_string(modules.size())}};
  return r;
}

CriterionResult iterated_boundary(const AcceptanceOptions& opt) {
  CriterionResult r{5, "d2 equals boundary1 o boundary0 on the packaged library; additivity", {}, {}, 0, 30};
  LawTable table;
  std::size_t entries = 0, nonzero = 0, mismatched = 0;
  for (const auto& entry : library()) {
    const auto v = verify_d2(entry.complex, entry.name, opt.seed, 4, opt.execution);
    table.add_all(v.laws, entry.name);
    ++entries;
    nonzero += v.nonzero > 0;
    mismatched += (v.nonzero > 0) != entry.has_nonzero_d2;
  }
  table.require("library has >= 10 complexes", entries >= 10, std::to_string(entries) + " complexes");
  table.require("some complex has a nonzero d2", nonzero >= 1, "every class vanished");
  table.require("nonzero classes where the library says so", mismatched == 0,
                std::to_string(mismatched) + " entries disagree");
  r.laws = table.take();
  r.facts = {{"complexes", std::to_string(entries)}, {"with nonzero d2", std::to_string(nonzero)}};
  return r;
}

CriterionResult cech_fixtures(const AcceptanceOptions&) {
  CriterionResult r{6, "Cech fixtures on the circle and full simplices", {}, {}, 0, 5};
  LawTable table;
  auto constant = [](const CoverNerve& n, const std::string& g) {
    return make_system(CoefficientSystem::constant(make_nerve(n), named(g)));
  };
  auto expect = [&](const std::string& law, const SystemPtr& s, int p, const FgAbGroup& want) {
    const auto got = Cohomology(s, p).group();
    table.require(law, *got == want, "got " + got->to_string() + ", want " + want.to_string());
  };
  expect("circle H^1(Z) = Z", constant(CoverNerve::circle(), "Z"), 1, FgAbGroup::free(1));
  for (long n : {2, 3, 4, 6})
    expect("circle H^1(Z/" + std::to_string(n) + ") = Z/" + std::to_string(n),
           constant(CoverNerve::circle(), "Z/" + std::to_string(n)), 1, FgAbGroup::cyclic(n));
  for (int k = 2; k <= 6; ++k)
    for (const std::string g : {"Z", "Z/2", "Z/6", "Z/2+Z/4"})
      for (int p : {1, 2})
        expect("full simplex H^1 = H^2 = 0", constant(CoverNerve::full_simplex(k), g), p, FgAbGroup());
  r.laws = table.take();
  r.facts = {{"full simplex sizes", "2..6"}};
  return r;
}

CriterionResult symbols(const AcceptanceOptions& opt) {
  CriterionResult r{7, "Steinberg, Weil reciprocity, deg div = 0, divisor torsor cocycles", {}, {}, 0, 60};
  constexpr int pairs = 500;
  constexpr long primes[] = {2, 3, 5};
  LawTable table;
  std::vector<std::uint64_t> steinberg_places(pairs, 0);
  table.add(sweep("Steinberg s(f, 1 - f) = 1 at every relevant place", pairs, opt.execution,
                  [&](std::uint64_t i) -> Fail {
                    Rng rng = case_rng(opt.seed, 7, i);
                    const long p = primes[i % 3];
                    for (int slot = 0; slot < 2; ++slot) {
                      const auto f = random_rational(p, 4, rng);
                      const auto g = f.one_minus();
                      if (g.is_zero()) continue;
                      const Divisor support = divisor(f) + divisor(g) + divisor(f * g);
                      std::vector<Place> places{Place::infinity(p)};
                      for (const auto& [v, n] : support.terms()) places.push_back(v);
                      for (const auto& v : places) {
                        ++steinberg_places[i];
                        if (!tame_symbol(v, f, g).value.is_one())
                          return "f = " + f.to_string() + " at " + v.to_string();
                      }
                    }
                    return std::nullopt;
                  }),
            "random f");
  table.add(sweep("Weil reciprocity product = 1", pairs, opt.execution, [&](std::uint64_t i) -> Fail {
              Rng rng = case_rng(opt.seed, 70, i);
              const long p = primes[i % 3];
              const auto f = random_rational(p, 4, rng), g = random_rational(p, 4, rng);
              const auto rep = weil_reciprocity(f, g, Execution::serial);
              if (!rep.holds())
                return "f = " + f.to_string() + ", g = " + g.to_string() + ": " + std::to_string(rep.product);
              if (divisor(f).degree() != 0 || divisor(g).degree() != 0) return "divisor of nonzero degree";
              return std::nullopt;
            }),
            "random pairs");
  table.add(sweep("deg div(f) = 0", pairs, opt.execution, [&](std::uint64_t i) -> Fail {
              Rng rng = case_rng(opt.seed, 71, i);
              const auto f = random_rational(primes[i % 3], 4, rng);
              const Divisor d = divisor(f);
              if (d.degree() != 0) return f.to_string() + " has divisor " + d.to_string();
              for (const auto& [v, n] : d.terms())
                if (ord(v, f) != n) return "ord disagrees with the divisor";
              return std::nullopt;
            }),
            "random f");

  constexpr int torsor_cases = 60;
  for (long p : primes) {
    const auto units = std::make_shared<const UnitSystem>(p);
    std::vector<Place> support{Place::finite(Poly::t(p)), Place::infinity(p)};
    for (int d = 1; d <= 3 && support.size() < 8; ++d)
      for (const auto& f : monic_polynomials(p, d))
        if (support.size() < 8 && !(f == Poly::t(p)) && is_irreducible(f)) support.push_back(Place::finite(f));
    const DivisorSequence seq(units, support);
    auto draw = [&](Rng& rng) {
      Divisor out;
      for (const auto& v : support) out.add(v, uniform_int(rng, -3, 3));
      return out;
    };
    const std::string field = "F_" + std::to_string(p);
    table.add(sweep("divisor_torsor_cocycle(D + D') = baer_sum", torsor_cases, Execution::serial,
                    [&](std::uint64_t i) -> Fail {
                      Rng rng = case_rng(opt.seed, 700 + p, i);
                      const Divisor a = draw(rng), b = draw(rng);
                      const auto ca = divisor_torsor_cocycle(a, *units), cb = divisor_torsor_cocycle(b, *units);
                      if (!(divisor_torsor_cocycle(a + b, *units).cocycle == baer_sum(ca.cocycle, cb.cocycle)))
                        return a.to_string() + " + " + b.to_string();
                      return std::nullopt;
                    }),
              field);
    table.add(sweep("Pic(P^1) degree recovered", torsor_cases, Execution::serial, [&](std::uint64_t i) -> Fail {
                Rng rng = case_rng(opt.seed, 710 + p, i);
                const Divisor a = draw(rng);
                const auto c = divisor_torsor_cocycle(a, *units);
                if (c.degree != a.degree())
                  return a.to_string() + ": degree " + std::to_string(a.degree()) + " read as " +
                         std::to_string(c.degree);
                if (!(units->h1().class_of(seq.torsor_of(a)) == c.cls)) return "boundary0 class differs";
                return std::nullopt;
              }),
              field);
  }
  std::uint64_t places = 0;
  for (auto n : steinberg_places) places += n;
  r.laws = table.take();
  r.facts = {{"random pairs", std::to_string(pairs)},
             {"fields", "F_2, F_3, F_5"},
             {"Steinberg evaluations", std::to_string(places)}};
  return r;
}

CriterionResult poonen_rains(const AcceptanceOptions& opt) {
  CriterionResult r{8, "Poonen-Rains UA cocycle is the pullback along the diagonal, |A| <= 9", {}, {}, 0, 5};
  LawTable table;
  std::size_t groups = 0;
  for (const auto& a : group_battery(9)) {
    if (a->is_trivial()) continue;
    table.add_all(verify_poonen_rains(PoonenRainsGroup(a), opt.execution), "U" + a->to_string());
    ++groups;
  }
  r.laws = table.take();
  r.facts = {{"groups", std::to_string(groups)}};
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = heisenberg_axioms(options); break;
    case 2: r = boundary_is_cup(options); break;
    case 3: r = functoriality(options); break;
    case 4: r = alexander_whitney(options); break;
    case 5: r = iterated_boundary(options); break;
    case 6: r = cech_fixtures(options); break;
    case 7: r = symbols(options); break;
    case 8: r = poonen_rains(options); break;
    default: throw InvalidInput("acceptance criterion " + std::to_string(id) + " is not computed here");
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace gf
