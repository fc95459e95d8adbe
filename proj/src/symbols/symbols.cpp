#include "gerbeforge/symbols/symbols.hpp"

#include <optional>
#include <set>

#include "gerbeforge/error.hpp"
#include "gerbeforge/parallel.hpp"
#include "gerbeforge/symbols/factor.hpp"

namespace gf {
namespace {

void require_nonzero(const RationalFunction& f, const char* where) {
  if (f.is_zero()) throw InvalidInput(std::string(where) + ": zero rational function");
}

void require_field(const Place& v, const RationalFunction& f) {
  if (v.p() != f.p()) throw ParentMismatch("place and function over different fields");
}

// Strips pi from x, returning the exponent.
long strip(Poly& x, const Poly& pi) {
  long n = 0;
  while (true) {
    auto [q, r] = divmod(x, pi);
    if (!r.is_zero()) return n;
    x = std::move(q);
    ++n;
  }
}

struct Split {
  long order;
  Poly unit_num, unit_den;  // prime to pi
};

Split split_at(const RationalFunction& f, const Poly& pi) {
  Poly n = f.numerator(), d = f.denominator();
  const long a = strip(n, pi);
  const long b = strip(d, pi);
  return {a - b, n, d};
}

}  // namespace

long ord(const Place& v, const RationalFunction& f) {
  require_nonzero(f, "ord");
  require_field(v, f);
  if (v.is_infinite()) return f.denominator().degree() - f.numerator().degree();
  return split_at(f, v.prime()).order;
}

ResidueValue tame_symbol(const Place& v, const RationalFunction& f, const RationalFunction& g) {
  require_nonzero(f, "tame_symbol");
  require_nonzero(g, "tame_symbol");
  require_field(v, f);
  require_field(v, g);
  const RationalFunction fl = v.is_infinite() ? f.at_infinity_chart() : f;
  const RationalFunction gl = v.is_infinite() ? g.at_infinity_chart() : g;
  const FiniteField k(v.residue_modulus());
  const Poly& pi = k.modulus();
  const Split fs = split_at(fl, pi), gs = split_at(gl, pi);
  const Poly f_unit = k.mul(fs.unit_num, k.inv(fs.unit_den));
  const Poly g_unit = k.mul(gs.unit_num, k.inv(gs.unit_den));
  Poly value = k.mul(k.pow(f_unit, gs.order), k.pow(g_unit, -fs.order));
  if ((fs.order * gs.order) % 2 != 0) value = k.reduce(-value);
  return {k, value};
}

Divisor divisor(const RationalFunction& f) {
  require_nonzero(f, "divisor");
  Divisor d;
  for (const auto& [pi, m] : factor(f.numerator())) d.add(Place::finite(pi), m);
  for (const auto& [pi, m] : factor(f.denominator())) d.add(Place::finite(pi), -m);
  d.add(Place::infinity(f.p()), ord(Place::infinity(f.p()), f));
  return d;
}

ReciprocityReport weil_reciprocity(const RationalFunction& f, const RationalFunction& g,
                                   Execution execution) {
  require_nonzero(f, "weil_reciprocity");
  require_nonzero(g, "weil_reciprocity");
  if (f.p() != g.p()) throw ParentMismatch("weil_reciprocity: functions over different fields");
  std::set<Place> places{Place::infinity(f.p())};
  for (const auto& h : {f, g}) {
    const Divisor d = divisor(h);
    for (const auto& [v, n] : d.terms()) places.insert(v);
  }
  const std::vector<Place> ordered(places.begin(), places.end());
  ReciprocityReport report;
  const auto local = indexed_map<std::optional<LocalSymbol>>(ordered.size(), execution, [&](std::size_t i) {
    auto [k, value] = tame_symbol(ordered[i], f, g);
    return std::optional<LocalSymbol>(LocalSymbol{ordered[i], value, k.norm(value)});
  });
  for (const auto& s : local) report.local.push_back(*s);
  const PrimeField fp(f.p());
  for (const auto& s : report.local) report.product = fp.mul(report.product, s.norm);
  return report;
}

}  // namespace gf
