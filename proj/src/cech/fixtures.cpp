#include "gerbeforge/cech/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "gerbeforge/cech/cohomology.hpp"
#include "gerbeforge/error.hpp"

namespace gf {

CoverNerve nerve_preset(const std::string& name) {
  if (name == "circle") return CoverNerve::circle();
  if (name == "sphere") return CoverNerve::sphere();
  if (name == "two_chart") return CoverNerve::two_chart();
  if (name == "torus") {
    // Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
    std::vector<Face> triangles;
    for (int i = 0; i < 7; ++i)
      for (int step : {1, 2}) {
        Face f{i, (i + step) % 7, (i + 3) % 7};
        std::sort(f.begin(), f.end());
        triangles.push_back(f);
      }
    return CoverNerve::from_maximal_faces(7, triangles);
  }
  const std::string prefix = "full_simplex:";
  if (name.rfind(prefix, 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(prefix.size()));
    } catch (const std::exception&) {
      throw InvalidInput("bad nerve preset '" + name + "'");
    }
    if (n < 1 || n > 8) throw InvalidInput("full_simplex size must be in 1..8");
    return CoverNerve::full_simplex(n);
  }
  throw InvalidInput("unknown nerve preset '" + name + "'");
}

CoefficientSystem gcd_system(NervePtr nerve, const std::vector<long>& index_orders) {
  if (static_cast<int>(index_orders.size()) != nerve->index_count())
    throw DimensionMismatch("gcd_system needs one order per cover index");
  auto order = [&](const Face& f) {
    long d = 0;
    for (int i : f) d = std::gcd(d, index_orders[i]);
    return d;
  };
  return CoefficientSystem::build(
      nerve, [&](const Face& f) { return make_group(FgAbGroup::cyclic(order(f))); },
      [&](const Face& from, const Face& to) {
        const long target = order(to);
        const IntMatrix one{{1}};
        if (target == 1) return IntMatrix(0, order(from) == 1 ? 0 : 1);
        if (order(from) == 1) return IntMatrix(1, 0);
        return one;
      });
}

CoefficientSystem direct_sum_system(const SystemPtr& a, const SystemPtr& b) {
  require_same_nerve(*a, *b, "direct_sum_system");
  const auto& nerve = a->nerve();
  const std::size_t n = nerve->face_count();
  std::vector<DirectSum> sums;
  std::vector<GroupPtr> groups;
  for (std::size_t id = 0; id < n; ++id) {
    sums.push_back(direct_sum({a->group_at(id), b->group_at(id)}));
    groups.push_back(sums.back().group);
  }
  std::vector<std::vector<GroupHom>> res(n);
  for (std::size_t id = 0; id < n; ++id) {
    const Face& f = nerve->face(id);
    if (f.size() < 2) continue;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const std::size_t from = nerve->id(omit(f, k));
      GroupHom h = compose(sums[id].injections[0],
                           compose(a->immediate(id, k), sums[from].projections[0])) +
                   compose(sums[id].injections[1],
                           compose(b->immediate(id, k), sums[from].projections[1]));
      res[id].push_back(std::move(h));
    }
  }
  return CoefficientSystem(nerve, std::move(groups), std::move(res));
}

namespace {

std::vector<long> draw_orders(int n, Rng& rng, const std::vector<long>& orders) {
  std::vector<long> out(n);
  for (auto& o : out) o = orders[uniform_int(rng, 0, static_cast<long>(orders.size()) - 1)];
  return out;
}

}  // namespace

CoefficientSystem random_system(const NervePtr& nerve, Rng& rng, const std::vector<long>& orders) {
  auto first = gcd_system(nerve, draw_orders(nerve->index_count(), rng, orders));
  if (uniform_int(rng, 0, 1) == 0) return first;
  auto second = gcd_system(nerve, draw_orders(nerve->index_count(), rng, orders));
  return direct_sum_system(make_system(std::move(first)), make_system(std::move(second)));
}

CoefficientSystem mobius_system(GroupPtr g) {
  const IntMatrix id = IntMatrix::identity(g->dimension());
  return CoefficientSystem::build(
      make_nerve(CoverNerve::circle()), [&](const Face&) { return g; },
      [&](const Face& from, const Face& to) {
        return from == Face{2} && to == Face{0, 2} ? -id : id;
      });
}

SystemHom random_reduction(const NervePtr& nerve, Rng& rng) {
  static const std::vector<long> sources = {0, 12, 6, 4};
  std::vector<long> from(nerve->index_count()), to(nerve->index_count());
  for (std::size_t i = 0; i < from.size(); ++i) {
    from[i] = sources[uniform_int(rng, 0, 3)];
    std::vector<long> divisors;
    for (long d : {0L, 1L, 2L, 3L, 4L, 6L, 12L})
      if (from[i] == 0 || (d != 0 && from[i] % d == 0)) divisors.push_back(d);
    to[i] = divisors[uniform_int(rng, 0, static_cast<long>(divisors.size()) - 1)];
  }
  auto source = make_system(gcd_system(nerve, from));
  auto target = make_system(gcd_system(nerve, to));
  const long factor = uniform_int(rng, 1, 5);
  return SystemHom::build(source, target, [&](const Face& f) {
    IntMatrix m(target->group_at(f)->dimension(), source->group_at(f)->dimension());
    if (m.rows() == 1 && m.cols() == 1) m(0, 0) = factor;
    return m;
  });
}

CoverNerve random_nerve(int n, Rng& rng) {
  std::vector<Face> faces;
  for (int i = 0; i < n; ++i) faces.push_back({i});
  auto has = [&](const Face& f) {
    for (const auto& g : faces)
      if (g == f) return true;
    return false;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform_int(rng, 0, 3) > 0) faces.push_back({i, j});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (has({i, j}) && has({i, k}) && has({j, k}) && uniform_int(rng, 0, 1) == 1)
          faces.push_back({i, j, k});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          if (has({i, j, k}) && has({i, j, l}) && has({i, k, l}) && has({j, k, l}) &&
              uniform_int(rng, 0, 1) == 1)
            faces.push_back({i, j, k, l});
  return CoverNerve::from_maximal_faces(n, faces);
}

Cochain random_cocycle(const SystemPtr& s, int p, Rng& rng) {
  const Cohomology h(s, p);
  Cochain z = h.representative(random_element(h.group(), rng, 3));
  if (p > 0) z = z + differential(Cochain::random(s, p - 1, rng, 3));
  return z;
}

NervePtr fixture_nerve(int trial, Rng& rng) {
  switch (trial % 5) {
    case 0: return make_nerve(CoverNerve::circle());
    case 1: return make_nerve(CoverNerve::full_simplex(3 + trial % 3));
    case 2: return make_nerve(CoverNerve::sphere());
    default: return make_nerve(random_nerve(4 + trial % 2, rng));
  }
}

std::vector<GroupPtr> group_battery(long max_order) {
  static const char* const names[] = {"0",       "Z/2",         "Z/3",     "Z/4",     "Z/2+Z/2", "Z/5",
                                      "Z/6",     "Z/7",         "Z/8",     "Z/2+Z/4", "Z/2+Z/2+Z/2",
                                      "Z/9",     "Z/3+Z/3",     "Z/10",    "Z/12",    "Z/2+Z/6",
                                      "Z/16",    "Z/4+Z/4",     "Z/2+Z/8", "Z/2+Z/2+Z/4"};
  std::vector<GroupPtr> out;
  for (const char* name : names) {
    auto g = make_group(FgAbGroup::parse(name));
    if (*g->order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace gf
