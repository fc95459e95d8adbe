#include "gerbeforge/fourterm/complex.hpp"

#include <algorithm>

#include "gerbeforge/error.hpp"

namespace gf {
namespace {

// Matrix whose columns are the coordinates of h(column) for each column of
// `columns`, each then pulled back through `into` (which must be injective
// on the values hit).
IntMatrix pull_back_columns(const GroupHom& into, const GroupHom& h, const IntMatrix& columns) {
  IntMatrix out(into.source()->dimension(), columns.cols());
  for (std::size_t c = 0; c < columns.cols(); ++c) {
    const GroupElement y = h(GroupElement(h.source(), columns.column_vector(c)));
    const auto x = preimage(into, y);
    ensure(x.has_value(), "induced map leaves the image");
    for (std::size_t r = 0; r < out.rows(); ++r) out(r, c) = x->coords()[r];
  }
  return out;
}

std::vector<std::vector<GroupHom>> induced_restrictions(
    const CoefficientSystem& ambient,
    const std::function<GroupHom(std::size_t from, std::size_t to, const GroupHom& r)>& induce) {
  const auto& nerve = *ambient.nerve();
  std::vector<std::vector<GroupHom>> res(nerve.face_count());
  for (std::size_t id = 0; id < nerve.face_count(); ++id) {
    const Face& f = nerve.face(id);
    if (f.size() < 2) continue;
    for (std::size_t k = 0; k < f.size(); ++k)
      res[id].push_back(induce(nerve.id(omit(f, k)), id, ambient.immediate(id, k)));
  }
  return res;
}

}  // namespace

ImageFactorization image_system(const SystemHom& h) {
  const auto& target = *h.target();
  const std::size_t n = target.nerve()->face_count();
  std::vector<Subgroup> subs;
  std::vector<GroupPtr> groups;
  for (std::size_t id = 0; id < n; ++id) {
    subs.push_back(hom_image(h.at(id)));
    groups.push_back(subs.back().group);
  }
  auto res = induced_restrictions(target, [&](std::size_t from, std::size_t to, const GroupHom& r) {
    return GroupHom(groups[from], groups[to],
                    pull_back_columns(subs[to].inclusion, r, subs[from].inclusion.matrix()));
  });
  auto system = make_system(CoefficientSystem(target.nerve(), groups, std::move(res)));
  std::vector<GroupHom> inclusions, corestrictions;
  for (std::size_t id = 0; id < n; ++id) {
    inclusions.emplace_back(groups[id], h.target()->group_at(id), subs[id].inclusion.matrix());
    const auto dim = h.source()->group_at(id)->dimension();
    corestrictions.emplace_back(h.source()->group_at(id), groups[id],
                                pull_back_columns(subs[id].inclusion, h.at(id), IntMatrix::identity(dim)));
  }
  return {{system, SystemHom(system, h.target(), std::move(inclusions))},
          SystemHom(h.source(), system, std::move(corestrictions))};
}

QuotientSystem cokernel_system(const SystemHom& h) {
  const auto& target = *h.target();
  const std::size_t n = target.nerve()->face_count();
  std::vector<Quotient> quotients;
  std::vector<GroupPtr> groups;
  for (std::size_t id = 0; id < n; ++id) {
    quotients.push_back(hom_cokernel(h.at(id)));
    groups.push_back(quotients.back().group);
  }
  auto res = induced_restrictions(target, [&](std::size_t from, std::size_t to, const GroupHom& r) {
    const GroupHom through = compose(quotients[to].projection, r);
    return GroupHom(groups[from], groups[to], through.matrix() * quotients[from].section);
  });
  auto system = make_system(CoefficientSystem(target.nerve(), groups, std::move(res)));
  std::vector<GroupHom> projections;
  for (std::size_t id = 0; id < n; ++id)
    projections.emplace_back(target.group_at(id), groups[id], quotients[id].projection.matrix());
  return {system, SystemHom(h.target(), system, std::move(projections))};
}

SubSystem godement(const SystemPtr& f) {
  const auto& nerve = *f->nerve();
  const std::size_t n = nerve.face_count();
  // star[id]: the indices i with face(id) u {i} a face, ascending.
  std::vector<std::vector<int>> star(n);
  std::vector<DirectSum> sums;
  std::vector<GroupPtr> groups;
  auto with = [&](const Face& s, int i) {
    Face t = s;
    if (std::find(t.begin(), t.end(), i) == t.end()) {
      t.push_back(i);
      std::sort(t.begin(), t.end());
    }
    return t;
  };
  for (std::size_t id = 0; id < n; ++id) {
    std::vector<GroupPtr> parts;
    for (int i = 0; i < nerve.index_count(); ++i) {
      const Face t = with(nerve.face(id), i);
      if (!nerve.contains(t)) continue;
      star[id].push_back(i);
      parts.push_back(f->group_at(t));
    }
    sums.push_back(direct_sum(parts));
    groups.push_back(sums.back().group);
  }

  auto component = [&](std::size_t id, int i) {
    const auto& s = star[id];
    return static_cast<std::size_t>(std::find(s.begin(), s.end(), i) - s.begin());
  };

  std::vector<std::vector<GroupHom>> res(n);
  for (std::size_t id = 0; id < n; ++id) {
    const Face& t = nerve.face(id);
    if (t.size() < 2) continue;
    for (std::size_t k = 0; k < t.size(); ++k) {
      const Face s = omit(t, k);
      const std::size_t from = nerve.id(s);
      GroupHom h = GroupHom::zero(groups[from], groups[id]);
      for (int i : star[id]) {
        const GroupHom r = f->restrict(with(s, i), with(t, i));
        h = h + compose(sums[id].injections[component(id, i)],
                        compose(r, sums[from].projections[component(from, i)]));
      }
      res[id].push_back(std::move(h));
    }
  }
  auto system = make_system(CoefficientSystem(f->nerve(), groups, std::move(res)));

  std::vector<GroupHom> diagonal;
  for (std::size_t id = 0; id < n; ++id) {
    const Face& s = nerve.face(id);
    GroupHom h = GroupHom::zero(f->group_at(id), groups[id]);
    for (int i : star[id])
      h = h + compose(sums[id].injections[component(id, i)], f->restrict(s, with(s, i)));
    diagonal.push_back(std::move(h));
  }
  return {system, SystemHom(f, system, std::move(diagonal))};
}

FourTermComplex::FourTermComplex(SystemHom iota, SystemHom del, SystemHom p)
    : iota_(std::move(iota)), del_(std::move(del)), p_(std::move(p)) {
  if (!same_system(iota_.target(), del_.source()) || !same_system(del_.target(), p_.source()))
    throw ParentMismatch("FourTermComplex: maps are not composable");
  const auto& nerve = *a()->nerve();
  for (std::size_t id = 0; id < nerve.face_count(); ++id) {
    const std::string where = " on face " + face_to_string(nerve.face(id));
    if (!is_injective(iota_.at(id))) throw ExactnessViolation("A -> L1 is not injective" + where);
    if (!is_exact(iota_.at(id), del_.at(id)))
      throw ExactnessViolation("image of A is not the kernel of L1 -> L0" + where);
    if (!is_exact(del_.at(id), p_.at(id)))
      throw ExactnessViolation("image of L1 is not the kernel of L0 -> B" + where);
    if (!is_surjective(p_.at(id))) throw ExactnessViolation("L0 -> B is not surjective" + where);
  }
}

MiddleImage splice(const FourTermComplex& ft) {
  auto f = image_system(ft.del());
  return {f.image.system, std::move(f.corestriction), std::move(f.image.inclusion)};
}

FourTermComplex godement_complex(const SystemPtr& a) {
  const SubSystem l1 = godement(a);
  const QuotientSystem c = cokernel_system(l1.inclusion);
  const SubSystem l0 = godement(c.system);
  const QuotientSystem b = cokernel_system(l0.inclusion);
  return FourTermComplex(l1.inclusion, compose(l0.inclusion, c.projection), b.projection);
}

}  // namespace gf
