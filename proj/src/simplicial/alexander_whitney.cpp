#include "gerbeforge/simplicial/alexander_whitney.hpp"

#include "gerbeforge/error.hpp"
#include "gerbeforge/random.hpp"
#include "gerbeforge/simplicial/normalized.hpp"

namespace gf {

AwCup::AwCup(GroupPtr a, GroupPtr b)
    : tensor_(tensor(a, b)), k_a_(a, 1, 2), k_b_(b, 1, 2), k_ab_(tensor_.group, 2, 2) {}

GroupElement AwCup::value(const GroupElement& x, const GroupElement& y) const {
  const Monotone id1{0, 1};
  const GroupElement front = k_a_.summand_projection(1, id1)(k_a_.object().face(2, 2)(x));
  const GroupElement back = k_b_.summand_projection(1, id1)(k_b_.object().face(2, 0)(y));
  return tensor_(front, back);
}

GroupElement AwCup::operator()(const GroupElement& x, const GroupElement& y) const {
  return k_ab_.summand_injection(2, {0, 1, 2})(value(x, y));
}

GroupElement AwCup::bar(const EilenbergMacLane& k, const GroupElement& g1, const GroupElement& g2) {
  // d_2 keeps only the summand (0,1,1), d_0 only (0,0,1).
  return k.summand_injection(2, {0, 1, 1})(g1) + k.summand_injection(2, {0, 0, 1})(g2);
}

std::vector<LawCheck> verify_aw_cup(const GroupPtr& a, const GroupPtr& b,
                                    const Prop34Options& options) {
  if (!a->is_finite() || !b->is_finite())
    throw InvalidInput("verify_aw_cup: the groups must be finite");
  const AwCup aw(a, b);
  const HeisenbergGroup h(a, b);
  const std::uint64_t na = a->order()->get_ui(), nb = b->order()->get_ui();
  const std::uint64_t pairs = na * nb;
  const bool exhaustive = pairs <= options.exhaustive_order;

  const auto& ka = aw.k_a().object();
  LawCheck faces = sweep("bar faces: d2 = g1, d1 = g1 + g2, d0 = g2", na * na, options.execution,
                         [&](std::uint64_t i) -> std::optional<std::string> {
                           const GroupElement g1 = element_at(a, i / na), g2 = element_at(a, i % na);
                           const GroupElement x = AwCup::bar(aw.k_a(), g1, g2);
                           const auto inj = aw.k_a().summand_injection(1, {0, 1});
                           if (ka.face(2, 2)(x) == inj(g1) && ka.face(2, 1)(x) == inj(g1 + g2) &&
                               ka.face(2, 0)(x) == inj(g2))
                             return std::nullopt;
                           return "g1=" + g1.to_string() + " g2=" + g2.to_string();
                         });

  auto compare = [&](const GroupElement& x1, const GroupElement& y1, const GroupElement& x2,
                     const GroupElement& y2) -> std::optional<std::string> {
    const GroupElement lhs = aw.value(AwCup::bar(aw.k_a(), x1, x2), AwCup::bar(aw.k_b(), y1, y2));
    const GroupElement rhs = h.cocycle(x1, y1, x2, y2);
    if (lhs == rhs) return std::nullopt;
    return "((" + x1.to_string() + "," + y1.to_string() + "),(" + x2.to_string() + "," +
           y2.to_string() + ")): aw=" + lhs.to_string() + " cocycle=" + rhs.to_string();
  };
  const std::string law = std::string("aw_cup equals the Heisenberg cocycle (") +
                          (exhaustive ? "exhaustive" : "random") + ")";
  LawCheck cup;
  if (exhaustive) {
    cup = sweep(law, pairs * pairs, options.execution, [&](std::uint64_t i) {
      const std::uint64_t first = i / pairs, second = i % pairs;
      return compare(element_at(a, first / nb), element_at(b, first % nb), element_at(a, second / nb),
                     element_at(b, second % nb));
    });
  } else {
    cup = sweep(law, options.random_cases, options.execution, [&](std::uint64_t i) {
      Rng rng(options.seed * 0x9e3779b97f4a7c15ull + i);
      const GroupElement x1 = random_element(a, rng), y1 = random_element(b, rng);
      const GroupElement x2 = random_element(a, rng), y2 = random_element(b, rng);
      return compare(x1, y1, x2, y2);
    });
  }
  return {faces, cup};
}

std::vector<LawCheck> verify_dold_kan(const GroupPtr& m, int i, int top) {
  const EilenbergMacLane k(m, i, top);
  std::vector<LawCheck> out = check_simplicial_identities(k.object());
  const NormalizedComplex n(k.object());
  LawCheck homology{"H_n(N K(M," + std::to_string(i) + ")) is M in degree " + std::to_string(i), 0, 0, {}};
  for (int d = 0; d < n.top(); ++d) {
    ++homology.cases;
    const GroupPtr h = n.homology(d);
    const bool ok = d == i ? *h == *m : h->is_trivial();
    if (!ok && homology.failures++ == 0)
      homology.first_failure = "H_" + std::to_string(d) + " = " + h->to_string();
  }
  out.push_back(homology);
  return out;
}

}  // namespace gf
