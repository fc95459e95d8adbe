#include "gerbeforge/fourterm/library.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gerbeforge/cech/fixtures.hpp"
#include "gerbeforge/error.hpp"

namespace gf {
namespace {

SystemPtr constant(const std::string& nerve, const std::string& group) {
  return make_system(CoefficientSystem::constant(make_nerve(nerve_preset(nerve)), make_group(FgAbGroup::parse(group))));
}

SystemHom scalar(const SystemPtr& s, const SystemPtr& t, long k) {
  return SystemHom::build(s, t, [k](const Face&) { return IntMatrix{{k}}; });
}

// Z -2-> Z -2-> Z/4 -> Z/2, constant.
FourTermComplex doubling(const std::string& nerve) {
  auto z = constant(nerve, "Z"), z4 = constant(nerve, "Z/4"), z2 = constant(nerve, "Z/2");
  return FourTermComplex(scalar(z, z, 2), scalar(z, z4, 2), scalar(z4, z2, 1));
}

// Z/2 -2-> Z/4 -2-> Z/4 -> Z/2, constant.
FourTermComplex torsion_doubling(const std::string& nerve) {
  auto z2 = constant(nerve, "Z/2"), z4 = constant(nerve, "Z/4");
  return FourTermComplex(scalar(z2, z4, 2), scalar(z4, z4, 2), scalar(z4, z2, 1));
}

// A =id=> A -0-> B =id=> B.
FourTermComplex split(const std::string& nerve, const std::string& a, const std::string& b) {
  auto sa = constant(nerve, a), sb = constant(nerve, b);
  return FourTermComplex(SystemHom::identity(sa), SystemHom::build(sa, sb, [&](const Face&) {
                           return IntMatrix(sb->group_at(0)->dimension(), sa->group_at(0)->dimension());
                         }),
                         SystemHom::identity(sb));
}

struct Entry {
  std::string description;
  bool nonzero;
  std::function<FourTermComplex()> build;
};

const std::map<std::string, Entry>& entries() {
  static const std::map<std::string, Entry> table{
      {"doubling-circle", {"Z -2-> Z -2-> Z/4 -> Z/2 on the circle", false, [] { return doubling("circle"); }}},
      {"doubling-sphere", {"Z -2-> Z -2-> Z/4 -> Z/2 on the sphere", false, [] { return doubling("sphere"); }}},
      {"torsion-doubling-sphere",
       {"Z/2 -2-> Z/4 -2-> Z/4 -> Z/2 on the sphere", false, [] { return torsion_doubling("sphere"); }}},
      {"split-simplex",
       {"Z/3 = Z/3 -0-> Z/2 = Z/2 on full_simplex:4", false, [] { return split("full_simplex:4", "Z/3", "Z/2"); }}},
      {"godement-circle-z2",
       {"two Godement steps from Z/2 on the circle", false, [] { return godement_complex(constant("circle", "Z/2")); }}},
      {"godement-simplex-z3",
       {"two Godement steps from Z/3 on full_simplex:3", false,
        [] { return godement_complex(constant("full_simplex:3", "Z/3")); }}},
      {"godement-sphere-z2",
       {"two Godement steps from Z/2 on the sphere", true, [] { return godement_complex(constant("sphere", "Z/2")); }}},
      {"godement-sphere-z3",
       {"two Godement steps from Z/3 on the sphere", true, [] { return godement_complex(constant("sphere", "Z/3")); }}},
      {"godement-sphere-z",
       {"two Godement steps from Z on the sphere", true, [] { return godement_complex(constant("sphere", "Z")); }}},
      {"godement-sphere-z2+z4",
       {"two Godement steps from Z/2+Z/4 on the sphere", true,
        [] { return godement_complex(constant("sphere", "Z/2+Z/4")); }}},
      {"godement-sphere-gcd",
       {"two Godement steps from the gcd system (2, 4, 4, Z) on the sphere", true,
        [] {
          const auto n = make_nerve(CoverNerve::sphere());
          return godement_complex(make_system(gcd_system(n, {2, 4, 4, 0})));
        }}},
      {"godement-circle-mobius",
       {"two Godement steps from the twisted Z on the circle", false,
        [] { return godement_complex(make_system(mobius_system(make_group(FgAbGroup::cyclic(0))))); }}},
  };
  return table;
}

Cochain sample_section(const Cohomology& h0, std::size_t k, Rng& rng) {
  const auto& g = h0.group();
  if (k < g->dimension()) return h0.representative(GroupElement::basis(g, k));
  return h0.representative(random_element(g, rng, 3));
}

}  // namespace

std::vector<std::string> library_names() {
  std::vector<std::string> out;
  for (const auto& [name, e] : entries()) out.push_back(name);
  return out;
}

LibraryComplex library_complex(const std::string& name) {
  const auto it = entries().find(name);
  if (it == entries().end()) throw InvalidInput("unknown library complex '" + name + "'");
  return {name, it->second.description, it->second.build(), it->second.nonzero};
}

std::vector<LibraryComplex> library() {
  std::vector<LibraryComplex> out;
  for (const auto& name : library_names()) out.push_back(library_complex(name));
  return out;
}

D2Verification verify_d2(const FourTermComplex& ft, std::string name, std::uint64_t seed, std::size_t samples,
                         Execution execution) {
  D2Verification out;
  out.name = std::move(name);
  const MiddleImage mid = splice(ft);
  const Cohomology h0(ft.b(), 0);
  samples = std::max(samples, h0.group()->dimension());
  out.samples = samples;
  Rng rng(seed);
  std::vector<Cochain> betas, gammas;
  for (std::size_t k = 0; k < samples; ++k) {
    betas.push_back(sample_section(h0, k, rng));
    gammas.push_back(sample_section(h0, samples, rng));
  }
  std::vector<D2Result> base;
  for (const auto& b : betas) base.push_back(d2(ft, b, execution));
  for (const auto& r : base) out.nonzero += !r.cls.is_zero();

  // Each law runs serially over the samples; the kernels inside d2 carry the parallelism.
  out.laws.push_back(sweep("d2 = boundary1 o boundary0", samples, Execution::serial, [&](std::uint64_t k) {
    const FactoredD2 f = d2_factored(ft, mid, betas[k], execution);
    std::optional<std::string> fail;
    if (!(f.cls == base[k].cls)) fail = "sample " + std::to_string(k) + ": d2 " + base[k].cls.to_string() +
                                       " vs factored " + f.cls.to_string();
    return fail;
  }));
  out.laws.push_back(sweep("d2 additive", samples, Execution::serial, [&](std::uint64_t k) {
    std::optional<std::string> fail;
    const auto sum = d2(ft, betas[k] + gammas[k], execution).cls;
    if (!(sum == base[k].cls + d2(ft, gammas[k], execution).cls)) fail = "sample " + std::to_string(k);
    return fail;
  }));
  out.laws.push_back(sweep("d2 independent of lifts", samples, Execution::serial, [&](std::uint64_t k) {
    std::optional<std::string> fail;
    const LiftChoice choice = random_lift_choice(ft, seed * 7919 + k);
    const auto moved = d2(ft, betas[k], execution, &choice);
    if (!(moved.cls == base[k].cls) || !is_coboundary(moved.cocycle - base[k].cocycle))
      fail = "sample " + std::to_string(k);
    return fail;
  }));
  out.laws.push_back(sweep("serial = parallel", samples, Execution::serial, [&](std::uint64_t k) {
    std::optional<std::string> fail;
    const Execution other = execution == Execution::serial ? Execution::parallel : Execution::serial;
    if (!(d2(ft, betas[k], other).cocycle == base[k].cocycle)) fail = "sample " + std::to_string(k);
    return fail;
  }));
  return out;
}

}  // namespace gf
