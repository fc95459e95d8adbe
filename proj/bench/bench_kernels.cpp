// Serial reference loops against the OpenMP kernels. Arg 0 is serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "gerbeforge/cech/cochain.hpp"
#include "gerbeforge/cech/fixtures.hpp"
#include "gerbeforge/fourterm/library.hpp"
#include "gerbeforge/heisenberg/verify.hpp"
#include "gerbeforge/lifting/boundary.hpp"
#include "gerbeforge/symbols/symbols.hpp"

namespace {

using namespace gf;

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

SystemPtr simplex_system(const char* group) {
  return make_system(CoefficientSystem::constant(make_nerve(CoverNerve::full_simplex(8)),
                                                 make_group(FgAbGroup::parse(group))));
}

void differential(benchmark::State& state) {
  Rng rng(1);
  const SystemPtr s = simplex_system("Z/4 + Z/6 + Z");
  const Cochain c = Cochain::random(s, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gf::differential(c, mode(state)));
}

void cup_product(benchmark::State& state) {
  Rng rng(2);
  const SystemPtr a = simplex_system("Z/4 + Z/6"), b = simplex_system("Z/6 + Z/2");
  const TensorSystem t = tensor_system(a, b);
  const Cochain p = Cochain::random(a, 1, rng), q = Cochain::random(b, 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(cup(p, q, t, mode(state)));
}

void heisenberg_boundary1(benchmark::State& state) {
  Rng rng(3);
  const SystemPtr a = simplex_system("Z/4 + Z/2"), b = simplex_system("Z/6");
  const HeisenbergExtension ext(a, b);
  const Cochain g = ext.pair(random_cocycle(a, 1, rng), random_cocycle(b, 1, rng));
  for (auto _ : state) benchmark::DoNotOptimize(boundary1(ext, g, mode(state)));
}

void axiom_sweep(benchmark::State& state) {
  const HeisenbergGroup h(make_group(FgAbGroup::cyclic(4)), make_group(FgAbGroup::cyclic(6)));
  AxiomOptions opt;
  opt.execution = mode(state);
  opt.exhaustive_order = 0;
  opt.random_triples = 20000;
  for (auto _ : state) benchmark::DoNotOptimize(verify_group_axioms(h, opt));
}

void d2_library(benchmark::State& state) {
  const LibraryComplex entry = library_complex("godement-sphere-z2+z4");
  for (auto _ : state) benchmark::DoNotOptimize(verify_d2(entry.complex, entry.name, 5, 4, mode(state)));
}

void weil(benchmark::State& state) {
  Rng rng(4);
  const RationalFunction f = random_rational(5, 6, rng), g = random_rational(5, 6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(weil_reciprocity(f, g, mode(state)));
}

}  // namespace

BENCHMARK(differential)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(cup_product)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(heisenberg_boundary1)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(axiom_sweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(d2_library)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(weil)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
