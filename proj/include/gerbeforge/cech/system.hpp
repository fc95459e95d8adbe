#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "gerbeforge/cech/nerve.hpp"
#include "gerbeforge/groups.hpp"

namespace gf {

// An abelian group on every face of a nerve with restriction maps along face
// inclusions S -> T, covariant in the inclusion. Stored as the immediate maps
// from each facet omit(T, k) into T; longer restrictions are composites.
// Functoriality (independence of the path) is validated at construction.
class CoefficientSystem {
 public:
  using GroupFn = std::function<GroupPtr(const Face&)>;
  // Matrix of the restriction from `from` to `to`, |to| = |from| + 1.
  using RestrictionFn = std::function<IntMatrix(const Face& from, const Face& to)>;

  // restrictions[id][k] goes from omit(face(id), k) to face(id).
  CoefficientSystem(NervePtr nerve, std::vector<GroupPtr> groups,
                    std::vector<std::vector<GroupHom>> restrictions);

  static CoefficientSystem constant(NervePtr nerve, GroupPtr group);
  static CoefficientSystem build(NervePtr nerve, const GroupFn& groups,
                                 const RestrictionFn& restrictions);

  const NervePtr& nerve() const { return nerve_; }
  const GroupPtr& group_at(std::size_t id) const { return groups_[id]; }
  const GroupPtr& group_at(const Face& f) const { return groups_[nerve_->id(f)]; }
  // Restriction from omit(face(id), k) to face(id).
  const GroupHom& immediate(std::size_t id, std::size_t k) const { return restrictions_[id][k]; }
  GroupHom restrict(const Face& from, const Face& to) const;

  // Cochain coordinates of degree p are the face coordinates concatenated in
  // face order.
  std::size_t cochain_dimension(int p) const;
  std::size_t offset(int p, std::size_t position) const { return offsets_[p][position]; }
  IntVector moduli(int p) const;
  IntMatrix relation_matrix(int p) const;
  bool all_finite(int p) const;

  friend bool operator==(const CoefficientSystem& a, const CoefficientSystem& b);

 private:
  void validate() const;

  NervePtr nerve_;
  std::vector<GroupPtr> groups_;
  std::vector<std::vector<GroupHom>> restrictions_;
  std::vector<std::vector<std::size_t>> offsets_;  // per degree, one past the end included
};

using SystemPtr = std::shared_ptr<const CoefficientSystem>;

SystemPtr make_system(CoefficientSystem s);
bool same_system(const SystemPtr& a, const SystemPtr& b);
void require_same_nerve(const CoefficientSystem& a, const CoefficientSystem& b, const char* where);

// Facewise homomorphisms commuting with restrictions (checked).
class SystemHom {
 public:
  SystemHom(SystemPtr source, SystemPtr target, std::vector<GroupHom> components);

  static SystemHom identity(SystemPtr s);
  static SystemHom build(SystemPtr source, SystemPtr target,
                         const std::function<IntMatrix(const Face&)>& matrices);

  const SystemPtr& source() const { return source_; }
  const SystemPtr& target() const { return target_; }
  const GroupHom& at(std::size_t id) const { return components_[id]; }
  const std::vector<GroupHom>& components() const { return components_; }

 private:
  SystemPtr source_;
  SystemPtr target_;
  std::vector<GroupHom> components_;
};

SystemHom compose(const SystemHom& g, const SystemHom& f);

// Facewise tensor product with the induced restrictions.
struct TensorSystem {
  SystemPtr left;
  SystemPtr right;
  SystemPtr system;
  std::vector<TensorProduct> products;  // by face id
};

TensorSystem tensor_system(const SystemPtr& a, const SystemPtr& b);

// f (x) g facewise between two tensor systems.
SystemHom tensor_system_hom(const SystemHom& f, const SystemHom& g, const TensorSystem& source,
                            const TensorSystem& target);

}  // namespace gf
