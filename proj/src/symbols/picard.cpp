#include "gerbeforge/symbols/picard.hpp"

#include <algorithm>
#include <set>

#include "gerbeforge/error.hpp"
#include "gerbeforge/lifting/boundary.hpp"

namespace gf {
namespace {

std::vector<Integer> unit_torsion(long p) {
  if (p == 2) return {};
  return {Integer(p - 1)};
}

}  // namespace

UnitSystem::UnitSystem(long p) : p_(p), root_(PrimeField(p).primitive_root()) {
  const std::size_t tors = unit_torsion(p).size();
  const auto nerve = make_nerve(CoverNerve::two_chart());
  const auto chart = make_group(FgAbGroup(unit_torsion(p), 0));
  const auto overlap = make_group(FgAbGroup(unit_torsion(p), 1));
  system_ = make_system(CoefficientSystem::build(
      nerve, [&](const Face& f) { return f.size() == 1 ? chart : overlap; },
      [&](const Face&, const Face&) {
        IntMatrix m(tors + 1, tors);
        if (tors) m(0, 0) = 1;
        return m;
      }));
  h1_ = std::make_shared<const Cohomology>(system_, 1);
  const auto& h = *h1_->group();
  ensure(h.free_rank() == 1 && h.torsion_rank() == 0, "H^1 of the two-chart unit system is not Z");
  const Cochain t_cocycle(system_, 1, {overlap_unit(RationalFunction::t(p))});
  t_class_ = h1_->class_of(t_cocycle).coords()[0];
  ensure(abs(t_class_) == 1, "the class of t does not generate H^1");
}

IntVector UnitSystem::log(long c) const {
  const PrimeField f(p_);
  c = f.reduce(c);
  if (c == 0) throw InvalidInput("zero is not a unit");
  if (p_ == 2) return {};
  long x = 1;
  for (long k = 0; k < p_ - 1; ++k, x = f.mul(x, root_))
    if (x == c) return make_vector({k});
  throw InvariantBreach("discrete log not found");
}

GroupElement UnitSystem::chart_unit(std::size_t vertex, long c) const {
  const auto& nerve = *system_->nerve();
  return GroupElement(system_->group_at(nerve.id({static_cast<int>(vertex)})), log(c));
}

GroupElement UnitSystem::overlap_unit(const RationalFunction& g) const {
  if (g.p() != p_) throw ParentMismatch("unit over a different field");
  const Poly& n = g.numerator();
  const Poly& d = g.denominator();
  auto monomial = [](const Poly& x) {
    return std::count_if(x.coefficients().begin(), x.coefficients().end(), [](long c) { return c != 0; }) == 1;
  };
  const bool monomials = monomial(n) && monomial(d);
  if (!monomials) throw InvalidInput("not a unit on the chart overlap: " + g.to_string());
  IntVector coords = log(n.lead());
  coords.push_back(Integer(n.degree() - d.degree()));
  return GroupElement(system_->group_at(system_->nerve()->id({0, 1})), std::move(coords));
}

long UnitSystem::degree(const GroupElement& cls) const {
  if (!(*cls.parent() == *h1_->group())) throw ParentMismatch("class outside H^1 of the unit system");
  const Integer d = cls.coords()[0] * t_class_;
  return d.get_si();
}

DivisorTorsor divisor_torsor_cocycle(const Divisor& d, const UnitSystem& units) {
  const long p = units.p();
  const auto t = RationalFunction::t(p);
  RationalFunction f0 = RationalFunction::constant(p, 1), f1 = f0;
  for (const auto& [v, n] : d.terms()) {
    if (v.p() != p) throw ParentMismatch("divisor over a different field");
    if (v.is_infinite()) {
      f1 = f1 * t.pow(-n);  // u = 1/t
      continue;
    }
    const RationalFunction pi(v.prime());
    f0 = f0 * pi.pow(n);
    // On U1 the prime pi != t is generated by u^deg(pi) pi(1/u) = t^-deg(pi) pi.
    if (!(v.prime() == Poly::t(p))) f1 = f1 * (pi * t.pow(-v.degree())).pow(n);
  }
  const RationalFunction g01 = f0 / f1;
  Cochain cocycle(units.system(), 1, {units.overlap_unit(g01)});
  GroupElement cls = units.h1().class_of(cocycle);
  const long degree = units.degree(cls);
  return {f0, f1, g01, std::move(cocycle), std::move(cls), degree};
}

DivisorSequence::DivisorSequence(std::shared_ptr<const UnitSystem> units, std::vector<Place> support)
    : units_(std::move(units)) {
  const long p = units_->p();
  std::set<Place> unique(support.begin(), support.end());
  for (const auto& v : unique)
    if (v.p() != p) throw ParentMismatch("support place over a different field");
  if (!unique.count(Place::infinity(p)) || !unique.count(Place::finite(Poly::t(p))))
    throw InvalidInput("the support must contain (t) and inf");
  support_.assign(unique.begin(), unique.end());
  for (const auto& v : support_)
    if (!v.is_infinite()) finite_.push_back(v);

  const auto& nerve = units_->system()->nerve();
  const std::size_t tors = unit_torsion(p).size();
  const auto k_s = make_group(FgAbGroup(unit_torsion(p), finite_.size()));
  s_units_ = make_system(CoefficientSystem::constant(nerve, k_s));
  divisors_ = make_system(CoefficientSystem::build(
      nerve, [&](const Face& f) { return make_group(FgAbGroup::free(places_on(nerve->id(f)).size())); },
      [&](const Face& from, const Face& to) {
        const auto src = places_on(nerve->id(from)), dst = places_on(nerve->id(to));
        IntMatrix m(dst.size(), src.size());
        for (std::size_t r = 0; r < dst.size(); ++r)
          for (std::size_t c = 0; c < src.size(); ++c)
            if (dst[r] == src[c]) m(r, c) = 1;
        return m;
      }));

  std::size_t t_index = 0;
  while (!(finite_[t_index] == Place::finite(Poly::t(p)))) ++t_index;
  inclusion_.emplace(SystemHom::build(units_->system(), s_units_, [&](const Face& f) {
    IntMatrix m(tors + finite_.size(), tors + (f.size() == 2 ? 1 : 0));
    if (tors) m(0, 0) = 1;
    if (f.size() == 2) m(tors + t_index, tors) = 1;
    return m;
  }));
  div_.emplace(SystemHom::build(s_units_, divisors_, [&](const Face& f) {
    const auto on = places_on(nerve->id(f));
    IntMatrix m(on.size(), tors + finite_.size());
    for (std::size_t r = 0; r < on.size(); ++r) {
      const Place& v = support_[on[r]];
      for (std::size_t j = 0; j < finite_.size(); ++j) {
        if (v.is_infinite()) m(r, tors + j) = -finite_[j].degree();
        else if (v == finite_[j]) m(r, tors + j) = 1;
      }
    }
    return m;
  }));
}

std::vector<std::size_t> DivisorSequence::places_on(std::size_t face) const {
  const Face& f = units_->system()->nerve()->face(face);
  const bool on_u0 = f.size() == 1 ? f[0] == 0 : false;
  const bool on_u1 = f.size() == 1 ? f[0] == 1 : false;
  const Place zero = Place::finite(Poly::t(units_->p()));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const Place& v = support_[i];
    const bool keep = v.is_infinite() ? on_u1 : (v == zero ? on_u0 : true);
    if (keep) out.push_back(i);
  }
  return out;
}

Cochain DivisorSequence::global_section(const Divisor& d) const {
  for (const auto& [v, n] : d.terms())
    if (!std::binary_search(support_.begin(), support_.end(), v))
      throw InvalidInput("divisor place " + v.to_string() + " outside the support");
  std::vector<GroupElement> parts;
  for (std::size_t id : divisors_->nerve()->faces_of_dimension(0)) {
    IntVector coords;
    for (std::size_t i : places_on(id)) coords.push_back(Integer(d.coefficient(support_[i])));
    parts.emplace_back(divisors_->group_at(id), std::move(coords));
  }
  return Cochain(divisors_, 0, std::move(parts));
}

Cochain DivisorSequence::torsor_of(const Divisor& d) const {
  const AbelianExtension ext(*inclusion_, *div_);
  return boundary0(ext, global_section(d), Execution::serial);
}

}  // namespace gf
