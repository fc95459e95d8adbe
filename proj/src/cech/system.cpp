#include "gerbeforge/cech/system.hpp"

#include <algorithm>

#include "gerbeforge/error.hpp"

namespace gf {

CoefficientSystem::CoefficientSystem(NervePtr nerve, std::vector<GroupPtr> groups,
                                     std::vector<std::vector<GroupHom>> restrictions)
    : nerve_(std::move(nerve)), groups_(std::move(groups)), restrictions_(std::move(restrictions)) {
  const std::size_t n = nerve_->face_count();
  if (groups_.size() != n || restrictions_.size() != n)
    throw DimensionMismatch("coefficient system needs one group and one restriction list per face");
  offsets_.assign(CoverNerve::max_dimension + 1, {});
  for (int p = 0; p <= CoverNerve::max_dimension; ++p) {
    std::size_t total = 0;
    for (std::size_t id : nerve_->faces_of_dimension(p)) {
      offsets_[p].push_back(total);
      total += groups_[id]->dimension();
    }
    offsets_[p].push_back(total);
  }
  validate();
}

void CoefficientSystem::validate() const {
  for (std::size_t id = 0; id < nerve_->face_count(); ++id) {
    const Face& f = nerve_->face(id);
    if (!groups_[id]) throw InvalidInput("missing group on face " + face_to_string(f));
    const std::size_t expected = f.size() > 1 ? f.size() : 0;
    if (restrictions_[id].size() != expected)
      throw DimensionMismatch("face " + face_to_string(f) + " needs " + std::to_string(expected) +
                              " restriction maps");
    for (std::size_t k = 0; k < expected; ++k) {
      const GroupHom& h = restrictions_[id][k];
      const Face from = omit(f, k);
      if (*h.source() != *group_at(from) || *h.target() != *groups_[id])
        throw InvalidInput("restriction " + face_to_string(from) + " -> " + face_to_string(f) +
                           " has the wrong source or target");
    }
  }
  // Two-step paths S -> S+v -> S+v+w versus S -> S+w -> S+v+w.
  for (std::size_t id = 0; id < nerve_->face_count(); ++id) {
    const Face& f = nerve_->face(id);
    if (f.size() < 3) continue;
    for (std::size_t l = 1; l < f.size(); ++l)
      for (std::size_t k = 0; k < l; ++k) {
        const std::size_t without_l = nerve_->id(omit(f, l));
        const std::size_t without_k = nerve_->id(omit(f, k));
        GroupHom via_l = compose(restrictions_[id][l], restrictions_[without_l][k]);
        GroupHom via_k = compose(restrictions_[id][k], restrictions_[without_k][l - 1]);
        if (!(via_l == via_k))
          throw InvalidInput("restrictions are not functorial into face " + face_to_string(f));
      }
  }
}

CoefficientSystem CoefficientSystem::constant(NervePtr nerve, GroupPtr group) {
  const std::size_t n = nerve->face_count();
  std::vector<GroupPtr> groups(n, group);
  std::vector<std::vector<GroupHom>> res(n);
  const GroupHom id = GroupHom::identity(group);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = nerve->face(i).size();
    if (m > 1) res[i].assign(m, id);
  }
  return CoefficientSystem(std::move(nerve), std::move(groups), std::move(res));
}

CoefficientSystem CoefficientSystem::build(NervePtr nerve, const GroupFn& group_fn,
                                           const RestrictionFn& restriction_fn) {
  const std::size_t n = nerve->face_count();
  std::vector<GroupPtr> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[i] = group_fn(nerve->face(i));
  std::vector<std::vector<GroupHom>> res(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Face& f = nerve->face(i);
    if (f.size() < 2) continue;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const Face from = omit(f, k);
      res[i].emplace_back(groups[nerve->id(from)], groups[i], restriction_fn(from, f));
    }
  }
  return CoefficientSystem(std::move(nerve), std::move(groups), std::move(res));
}

GroupHom CoefficientSystem::restrict(const Face& from, const Face& to) const {
  const std::size_t to_id = nerve_->id(to);
  if (from == to) return GroupHom::identity(groups_[to_id]);
  if (!std::includes(to.begin(), to.end(), from.begin(), from.end()) || from.empty())
    throw InvalidInput("no inclusion " + face_to_string(from) + " -> " + face_to_string(to));
  // Drop the last index of `to` missing from `from`.
  std::size_t k = to.size();
  while (k > 0 && std::binary_search(from.begin(), from.end(), to[k - 1])) --k;
  const Face smaller = omit(to, k - 1);
  return compose(restrictions_[to_id][k - 1], restrict(from, smaller));
}

std::size_t CoefficientSystem::cochain_dimension(int p) const {
  if (p < 0 || p > CoverNerve::max_dimension) return 0;
  return offsets_[p].back();
}

IntVector CoefficientSystem::moduli(int p) const {
  IntVector out;
  out.reserve(cochain_dimension(p));
  for (std::size_t id : nerve_->faces_of_dimension(p)) {
    const auto m = groups_[id]->moduli();
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

IntMatrix CoefficientSystem::relation_matrix(int p) const {
  std::vector<IntMatrix> blocks;
  for (std::size_t id : nerve_->faces_of_dimension(p)) blocks.push_back(groups_[id]->relation_matrix());
  if (blocks.empty()) return IntMatrix(0, 0);
  return block_diagonal(blocks);
}

bool CoefficientSystem::all_finite(int p) const {
  for (std::size_t id : nerve_->faces_of_dimension(p))
    if (!groups_[id]->is_finite()) return false;
  return true;
}

bool operator==(const CoefficientSystem& a, const CoefficientSystem& b) {
  if (!(*a.nerve_ == *b.nerve_)) return false;
  for (std::size_t i = 0; i < a.groups_.size(); ++i) {
    if (*a.groups_[i] != *b.groups_[i]) return false;
    for (std::size_t k = 0; k < a.restrictions_[i].size(); ++k)
      if (a.restrictions_[i][k].matrix() != b.restrictions_[i][k].matrix()) return false;
  }
  return true;
}

SystemPtr make_system(CoefficientSystem s) {
  return std::make_shared<const CoefficientSystem>(std::move(s));
}

bool same_system(const SystemPtr& a, const SystemPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_nerve(const CoefficientSystem& a, const CoefficientSystem& b, const char* where) {
  if (a.nerve() != b.nerve() && !(*a.nerve() == *b.nerve()))
    throw ParentMismatch(std::string(where) + ": systems live on different nerves");
}

SystemHom::SystemHom(SystemPtr source, SystemPtr target, std::vector<GroupHom> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_same_nerve(*source_, *target_, "SystemHom");
  const auto& nerve = *source_->nerve();
  if (components_.size() != nerve.face_count())
    throw DimensionMismatch("SystemHom needs one component per face");
  for (std::size_t id = 0; id < nerve.face_count(); ++id) {
    const GroupHom& h = components_[id];
    if (*h.source() != *source_->group_at(id) || *h.target() != *target_->group_at(id))
      throw InvalidInput("SystemHom component on " + face_to_string(nerve.face(id)) +
                         " has the wrong source or target");
  }
  for (std::size_t id = 0; id < nerve.face_count(); ++id) {
    const Face& f = nerve.face(id);
    if (f.size() < 2) continue;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const std::size_t from = nerve.id(omit(f, k));
      const GroupHom lhs = compose(components_[id], source_->immediate(id, k));
      const GroupHom rhs = compose(target_->immediate(id, k), components_[from]);
      if (!(lhs == rhs))
        throw InvalidInput("SystemHom is not natural along " + face_to_string(omit(f, k)) +
                           " -> " + face_to_string(f));
    }
  }
}

SystemHom SystemHom::identity(SystemPtr s) {
  std::vector<GroupHom> comps;
  for (std::size_t id = 0; id < s->nerve()->face_count(); ++id)
    comps.push_back(GroupHom::identity(s->group_at(id)));
  return SystemHom(s, s, std::move(comps));
}

SystemHom SystemHom::build(SystemPtr source, SystemPtr target,
                           const std::function<IntMatrix(const Face&)>& matrices) {
  std::vector<GroupHom> comps;
  for (std::size_t id = 0; id < source->nerve()->face_count(); ++id)
    comps.emplace_back(source->group_at(id), target->group_at(id),
                       matrices(source->nerve()->face(id)));
  return SystemHom(std::move(source), std::move(target), std::move(comps));
}

SystemHom compose(const SystemHom& g, const SystemHom& f) {
  if (!same_system(f.target(), g.source())) throw ParentMismatch("SystemHom compose: incomposable");
  std::vector<GroupHom> comps;
  for (std::size_t id = 0; id < f.components().size(); ++id)
    comps.push_back(compose(g.at(id), f.at(id)));
  return SystemHom(f.source(), g.target(), std::move(comps));
}

TensorSystem tensor_system(const SystemPtr& a, const SystemPtr& b) {
  require_same_nerve(*a, *b, "tensor_system");
  const auto& nerve = a->nerve();
  const std::size_t n = nerve->face_count();
  std::vector<TensorProduct> products;
  products.reserve(n);
  std::vector<GroupPtr> groups;
  for (std::size_t id = 0; id < n; ++id) {
    products.push_back(tensor(a->group_at(id), b->group_at(id)));
    groups.push_back(products.back().group);
  }
  std::vector<std::vector<GroupHom>> res(n);
  for (std::size_t id = 0; id < n; ++id) {
    const Face& f = nerve->face(id);
    if (f.size() < 2) continue;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const std::size_t from = nerve->id(omit(f, k));
      res[id].push_back(
          tensor_hom(a->immediate(id, k), b->immediate(id, k), products[from], products[id]));
    }
  }
  auto system = make_system(CoefficientSystem(nerve, std::move(groups), std::move(res)));
  return {a, b, std::move(system), std::move(products)};
}

SystemHom tensor_system_hom(const SystemHom& f, const SystemHom& g, const TensorSystem& source,
                            const TensorSystem& target) {
  if (!same_system(f.source(), source.left) || !same_system(g.source(), source.right) ||
      !same_system(f.target(), target.left) || !same_system(g.target(), target.right))
    throw ParentMismatch("tensor_system_hom: homs do not match the tensor systems");
  std::vector<GroupHom> comps;
  for (std::size_t id = 0; id < source.products.size(); ++id)
    comps.push_back(tensor_hom(f.at(id), g.at(id), source.products[id], target.products[id]));
  return SystemHom(source.system, target.system, std::move(comps));
}

}  // namespace gf
