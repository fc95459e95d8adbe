#include "gerbeforge/heisenberg/verify.hpp"

#include <algorithm>
#include <array>

#include "gerbeforge/error.hpp"
#include "gerbeforge/random.hpp"

namespace gf {
namespace {

using Index = std::uint32_t;

// All elements of a finite H, indexed (a, b, t) with t fastest.
class Enumeration {
 public:
  explicit Enumeration(const HeisenbergGroup& g)
      : a_(all_elements(g.a_group())),
        b_(all_elements(g.b_group())),
        t_(all_elements(g.tensor_group())) {}

  std::size_t na() const { return a_.size(); }
  std::size_t nb() const { return b_.size(); }
  std::size_t nt() const { return t_.size(); }
  std::size_t size() const { return a_.size() * b_.size() * t_.size(); }
  std::size_t base_size() const { return a_.size() * b_.size(); }

  const std::vector<GroupElement>& a() const { return a_; }
  const std::vector<GroupElement>& b() const { return b_; }
  const std::vector<GroupElement>& t() const { return t_; }

  HeisenbergElement at(std::size_t i) const {
    const std::size_t it = i % nt(), rest = i / nt();
    return {a_[rest / nb()], b_[rest % nb()], t_[it]};
  }
  std::size_t index(const HeisenbergElement& h) const {
    return (element_index(h.a) * nb() + element_index(h.b)) * nt() + element_index(h.t);
  }
  // Element of A x B as (a, b).
  std::pair<const GroupElement&, const GroupElement&> base_at(std::size_t i) const {
    return {a_[i / nb()], b_[i % nb()]};
  }

 private:
  std::vector<GroupElement> a_, b_, t_;
};

// Index arithmetic for H compiled from library calls on the components.
class ProductTable {
 public:
  ProductTable(const HeisenbergGroup& g, const Enumeration& e)
      : na_(e.na()), nb_(e.nb()), nt_(e.nt()) {
    add_a_ = addition(e.a());
    add_b_ = addition(e.b());
    add_t_ = addition(e.t());
    pair_.resize(na_ * nb_);
    for (std::size_t i = 0; i < na_; ++i)
      for (std::size_t j = 0; j < nb_; ++j)
        pair_[i * nb_ + j] = static_cast<Index>(element_index(g.tensor()(e.a()[i], e.b()[j])));
  }

  Index mul(Index x, Index y) const {
    const Index xt = x % nt_, xr = x / nt_, yt = y % nt_, yr = y / nt_;
    const Index xa = xr / nb_, xb = xr % nb_, ya = yr / nb_, yb = yr % nb_;
    const Index a = add_a_[xa * na_ + ya];
    const Index b = add_b_[xb * nb_ + yb];
    const Index t = add_t_[add_t_[xt * nt_ + yt] * nt_ + pair_[xa * nb_ + yb]];
    return (a * nb_ + b) * nt_ + t;
  }

 private:
  static std::vector<Index> addition(const std::vector<GroupElement>& elems) {
    const std::size_t n = elems.size();
    std::vector<Index> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        table[i * n + j] = static_cast<Index>(element_index(elems[i] + elems[j]));
    return table;
  }

  Index na_, nb_, nt_;
  std::vector<Index> add_a_, add_b_, add_t_, pair_;
};

HeisenbergElement random_element(const HeisenbergGroup& g, Rng& rng) {
  auto a = gf::random_element(g.a_group(), rng);
  auto b = gf::random_element(g.b_group(), rng);
  auto t = gf::random_element(g.tensor_group(), rng);
  return {std::move(a), std::move(b), std::move(t)};
}

std::string describe(const HeisenbergGroup& g) {
  return "H(" + g.a_group()->to_string() + ", " + g.b_group()->to_string() + ")";
}

std::optional<std::string> mismatch(const std::string& what, const HeisenbergElement& got,
                                    const HeisenbergElement& want) {
  if (got == want) return std::nullopt;
  return what + ": got " + got.to_string() + ", expected " + want.to_string();
}

std::optional<std::string> mismatch(const std::string& what, const GroupElement& got,
                                    const GroupElement& want) {
  if (got == want) return std::nullopt;
  return what + ": got " + got.to_string() + ", expected " + want.to_string();
}

void require_finite(const HeisenbergGroup& g, const char* where) {
  if (!g.order()) throw InvalidInput(std::string(where) + ": " + describe(g) + " is infinite");
}

AxiomReport random_axioms(const HeisenbergGroup& g, const AxiomOptions& options) {
  AxiomReport report;
  report.group = describe(g);
  report.order = g.order() ? g.order()->get_ui() : 0;
  report.exhaustive = false;

  Rng rng(options.seed);
  std::vector<std::array<HeisenbergElement, 3>> triples;
  triples.reserve(options.random_triples);
  for (std::uint64_t i = 0; i < options.random_triples; ++i)
    triples.push_back({random_element(g, rng), random_element(g, rng), random_element(g, rng)});

  const auto e = g.identity();
  report.laws.push_back(sweep("identity", triples.size(), options.execution, [&](std::uint64_t i) {
    const auto& x = triples[i][0];
    if (auto m = mismatch("e*x", g.mul(e, x), x)) return m;
    return mismatch("x*e", g.mul(x, e), x);
  }));
  report.laws.push_back(sweep("inverse", triples.size(), options.execution, [&](std::uint64_t i) {
    const auto& x = triples[i][0];
    if (auto m = mismatch("x*inv(x)", g.mul(x, g.inv(x)), e)) return m;
    return mismatch("inv(x)*x", g.mul(g.inv(x), x), e);
  }));
  report.laws.push_back(
      sweep("associativity", triples.size(), options.execution, [&](std::uint64_t i) {
        const auto& [x, y, z] = triples[i];
        return mismatch("(xy)z vs x(yz)", g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
      }));
  return report;
}

}  // namespace

AxiomReport verify_group_axioms(const HeisenbergGroup& g, const AxiomOptions& options) {
  const auto order = g.order();
  if (!order || *order > options.exhaustive_order) return random_axioms(g, options);

  AxiomReport report;
  report.group = describe(g);
  report.order = order->get_ui();
  report.exhaustive = true;

  const Enumeration enumeration(g);
  const std::uint64_t n = enumeration.size();
  const auto e = g.identity();

  report.laws.push_back(sweep("identity", n, options.execution, [&](std::uint64_t i) {
    const auto x = enumeration.at(i);
    if (auto m = mismatch("e*x", g.mul(e, x), x)) return m;
    return mismatch("x*e", g.mul(x, e), x);
  }));
  report.laws.push_back(sweep("inverse", n, options.execution, [&](std::uint64_t i) {
    const auto x = enumeration.at(i);
    if (auto m = mismatch("x*inv(x)", g.mul(x, g.inv(x)), e)) return m;
    return mismatch("inv(x)*x", g.mul(g.inv(x), x), e);
  }));

  if (options.execution == Execution::serial) {
    report.laws.push_back(sweep("associativity", n * n * n, Execution::serial, [&](std::uint64_t i) {
      const auto x = enumeration.at(i / (n * n)), y = enumeration.at(i / n % n),
                 z = enumeration.at(i % n);
      return mismatch("(xy)z vs x(yz)", g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
    }));
    return report;
  }

  const ProductTable table(g, enumeration);
  report.laws.push_back(sweep("product table", n * n, Execution::parallel, [&](std::uint64_t i) {
    const auto x = enumeration.at(i / n), y = enumeration.at(i % n);
    const auto want = enumeration.index(g.mul(x, y));
    const auto got = table.mul(static_cast<Index>(i / n), static_cast<Index>(i % n));
    if (got == want) return std::optional<std::string>{};
    return std::optional<std::string>("table disagrees with mul at " + x.to_string() + " * " +
                                      y.to_string());
  }));

  LawCheck assoc;
  assoc.law = "associativity";
  assoc.cases = n * n * n;
  std::uint64_t failures = 0, first = assoc.cases;
  const auto nn = static_cast<std::int64_t>(n);
#pragma omp parallel for collapse(2) schedule(static) reduction(+ : failures)
  for (std::int64_t x = 0; x < nn; ++x)
    for (std::int64_t y = 0; y < nn; ++y) {
      const Index xy = table.mul(static_cast<Index>(x), static_cast<Index>(y));
      for (std::int64_t z = 0; z < nn; ++z) {
        const Index lhs = table.mul(xy, static_cast<Index>(z));
        const Index rhs = table.mul(static_cast<Index>(x),
                                    table.mul(static_cast<Index>(y), static_cast<Index>(z)));
        if (lhs != rhs) {
          ++failures;
          const auto idx = static_cast<std::uint64_t>((x * nn + y) * nn + z);
#pragma omp critical(gerbeforge_assoc_first)
          if (idx < first) first = idx;
        }
      }
    }
  assoc.failures = failures;
  if (failures > 0) {
    const auto x = enumeration.at(first / (n * n)), y = enumeration.at(first / n % n),
               z = enumeration.at(first % n);
    assoc.first_failure = "case " + std::to_string(first) + ": (xy)z vs x(yz) at " +
                          x.to_string() + ", " + y.to_string() + ", " + z.to_string();
  }
  report.laws.push_back(std::move(assoc));
  return report;
}

std::vector<LawCheck> verify_extension_laws(const HeisenbergGroup& g, Execution execution) {
  require_finite(g, "verify_extension_laws");
  const Enumeration en(g);
  const std::uint64_t n = en.size(), m = en.base_size(), nt = en.nt();
  std::vector<LawCheck> out;

  auto add = [](const std::pair<const GroupElement&, const GroupElement&>& x,
                const std::pair<const GroupElement&, const GroupElement&>& y) {
    return std::pair<GroupElement, GroupElement>{x.first + y.first, x.second + y.second};
  };

  out.push_back(sweep("2-cocycle identity", m * m * m, execution, [&](std::uint64_t i) {
    const auto x = en.base_at(i / (m * m)), y = en.base_at(i / m % m), z = en.base_at(i % m);
    const auto xy = add(x, y), yz = add(y, z);
    const auto lhs = g.cocycle(x.first, x.second, y.first, y.second) +
                     g.cocycle(xy.first, xy.second, z.first, z.second);
    const auto rhs = g.cocycle(y.first, y.second, z.first, z.second) +
                     g.cocycle(x.first, x.second, yz.first, yz.second);
    return mismatch("f(x,y)+f(x+y,z) vs f(y,z)+f(x,y+z)", lhs, rhs);
  }));

  out.push_back(sweep("normalized cocycle", m, execution, [&](std::uint64_t i) {
    const auto x = en.base_at(i);
    const auto za = GroupElement::zero(g.a_group());
    const auto zb = GroupElement::zero(g.b_group());
    if (auto r = mismatch("f(x,0)", g.cocycle(x.first, x.second, za, zb),
                          GroupElement::zero(g.tensor_group())))
      return r;
    return mismatch("f(0,x)", g.cocycle(za, zb, x.first, x.second),
                    GroupElement::zero(g.tensor_group()));
  }));

  out.push_back(sweep("commutator is alternation", n * n, execution, [&](std::uint64_t i) {
    const auto x = en.at(i / n), y = en.at(i % n);
    return mismatch("[x,y]", g.commutator(x, y), g.central(g.alternation(x.a, x.b, y.a, y.b)));
  }));

  out.push_back(sweep("central kernel", nt * n, execution, [&](std::uint64_t i) {
    const auto c = g.central(en.t()[i / n]);
    const auto x = en.at(i % n);
    return mismatch("c*x vs x*c", g.mul(c, x), g.mul(x, c));
  }));

  out.push_back(sweep("projection is a homomorphism", n * n, execution, [&](std::uint64_t i) {
    const auto x = en.at(i / n), y = en.at(i % n);
    const auto xy = g.mul(x, y);
    if (auto r = mismatch("a-part", xy.a, x.a + y.a)) return r;
    return mismatch("b-part", xy.b, x.b + y.b);
  }));

  out.push_back(sweep("alternation biadditive", m * m * m, execution, [&](std::uint64_t i) {
    const auto x = en.base_at(i / (m * m)), x2 = en.base_at(i / m % m), y = en.base_at(i % m);
    const auto s = add(x, x2);
    return mismatch("phi(x+x',y)", g.alternation(s.first, s.second, y.first, y.second),
                    g.alternation(x.first, x.second, y.first, y.second) +
                        g.alternation(x2.first, x2.second, y.first, y.second));
  }));

  out.push_back(sweep("alternation alternating", m, execution, [&](std::uint64_t i) {
    const auto x = en.base_at(i);
    return mismatch("phi(x,x)", g.alternation(x.first, x.second, x.first, x.second),
                    GroupElement::zero(g.tensor_group()));
  }));
  return out;
}

LawCheck verify_hom_property(const HeisenbergGroup& source, const HeisenbergGroup& target,
                             const HeisenbergHom& h, Execution execution) {
  require_finite(source, "verify_hom_property");
  const Enumeration en(source);
  const std::uint64_t n = en.size();
  return sweep("H(f,g) is a homomorphism", n * n, execution, [&](std::uint64_t i) {
    const auto x = en.at(i / n), y = en.at(i % n);
    return mismatch("map(xy) vs map(x)map(y)", h(source.mul(x, y)), target.mul(h(x), h(y)));
  });
}

std::vector<LawCheck> verify_poonen_rains(const PoonenRainsGroup& ua, Execution execution) {
  const auto& a = ua.a_group();
  if (!a->is_finite()) throw InvalidInput("verify_poonen_rains: A must be finite");
  const auto as = all_elements(a);
  const auto ts = all_elements(ua.tensor_group());
  const std::uint64_t na = as.size(), n = as.size() * ts.size();
  const auto& h = ua.heisenberg();
  auto at = [&](std::uint64_t i) { return ua.element(as[i / ts.size()], ts[i % ts.size()]); };

  std::vector<LawCheck> out;
  out.push_back(sweep("UA cocycle is the diagonal pullback", na * na, execution,
                      [&](std::uint64_t i) {
                        const auto& x = as[i / na];
                        const auto& y = as[i % na];
                        return mismatch("cocycle", ua.cocycle(x, y), h.cocycle(x, x, y, y));
                      }));
  out.push_back(sweep("UA alternation is the diagonal pullback", na * na, execution,
                      [&](std::uint64_t i) {
                        const auto& x = as[i / na];
                        const auto& y = as[i % na];
                        return mismatch("alternation", ua.alternation(x, y),
                                        h.alternation(x, x, y, y));
                      }));
  // The product is additive in t, so pairs (a, a') with a spread of central
  // parts exercise every term of the law.
  const std::uint64_t spread = std::min<std::uint64_t>(ts.size(), 8);
  out.push_back(sweep("diagonal is a homomorphism", na * na * spread, execution,
                      [&](std::uint64_t i) {
                        const auto k = i % spread, pair = i / spread;
                        const auto x = ua.element(as[pair / na], ts[k * ts.size() / spread]);
                        const auto y = ua.element(as[pair % na], ts[(k * 5 + 1) % ts.size()]);
                        return mismatch("diag(xy)", ua.diagonal(ua.mul(x, y)),
                                        h.mul(ua.diagonal(x), ua.diagonal(y)));
                      }));
  out.push_back(sweep("UA inverse", n, execution, [&](std::uint64_t i) {
    const auto x = at(i);
    if (ua.mul(x, ua.inv(x)) != ua.identity())
      return std::optional<std::string>("x*inv(x) != e for " + x.to_string());
    return mismatch("diag(inv x)", ua.diagonal(ua.inv(x)), h.inv(ua.diagonal(x)));
  }));
  return out;
}

}  // namespace gf
