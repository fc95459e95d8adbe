#include "gerbeforge/lifting/extension.hpp"

#include "gerbeforge/cech/fixtures.hpp"
#include "gerbeforge/error.hpp"

namespace gf {

HeisenbergExtension::HeisenbergExtension(SystemPtr a, SystemPtr b) : tensor_(tensor_system(a, b)) {
  require_same_nerve(*a, *b, "HeisenbergExtension");
  base_ = make_system(direct_sum_system(a, b));
  const std::size_t n = a->nerve()->face_count();
  for (std::size_t id = 0; id < n; ++id) {
    sums_.push_back(direct_sum({a->group_at(id), b->group_at(id)}));
    ensure(*sums_.back().group == *base_->group_at(id), "HeisenbergExtension: base mismatch");
    groups_.emplace_back(tensor_.products[id]);
  }
}

HeisenbergElement HeisenbergExtension::unpack(const Bundle& e) {
  if (e.size() != 3) throw DimensionMismatch("Heisenberg bundle must have three parts");
  return {e[0], e[1], e[2]};
}

Bundle HeisenbergExtension::pack(const HeisenbergElement& h) { return {h.a, h.b, h.t}; }

Cochain HeisenbergExtension::pair(const Cochain& p, const Cochain& q) const {
  if (!same_system(p.system(), a_system()) || !same_system(q.system(), b_system()) ||
      p.degree() != q.degree())
    throw ParentMismatch("HeisenbergExtension::pair: cochains do not match the extension");
  std::vector<GroupElement> comps;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& ds = sums_[p.face_id(i)];
    comps.push_back(ds.injections[0](p[i]) + ds.injections[1](q[i]));
  }
  return Cochain(base_, p.degree(), std::move(comps));
}

Bundle HeisenbergExtension::mul(std::size_t face, const Bundle& x, const Bundle& y) const {
  return pack(groups_[face].mul(unpack(x), unpack(y)));
}

Bundle HeisenbergExtension::inv(std::size_t face, const Bundle& x) const {
  return pack(groups_[face].inv(unpack(x)));
}

Bundle HeisenbergExtension::section(std::size_t face, const GroupElement& g) const {
  const auto& ds = sums_[face];
  return pack(groups_[face].section(ds.projections[0](g), ds.projections[1](g)));
}

GroupElement HeisenbergExtension::project(std::size_t face, const Bundle& e) const {
  const auto h = unpack(e);
  const auto& ds = sums_[face];
  return ds.injections[0](h.a) + ds.injections[1](h.b);
}

Bundle HeisenbergExtension::include(std::size_t face, const GroupElement& t) const {
  return pack(groups_[face].central(t));
}

GroupElement HeisenbergExtension::kernel_part(std::size_t face, const Bundle& e) const {
  const auto h = unpack(e);
  groups_[face].check(h, "HeisenbergExtension::kernel_part");
  ensure(h.a.is_zero() && h.b.is_zero(), "Heisenberg element is not central: " + h.to_string());
  return h.t;
}

Bundle HeisenbergExtension::restrict(std::size_t face, std::size_t k, const Bundle& e) const {
  const auto h = unpack(e);
  return {a_system()->immediate(face, k)(h.a), b_system()->immediate(face, k)(h.b),
          kernel()->immediate(face, k)(h.t)};
}

std::string HeisenbergExtension::describe() const { return "Heisenberg extension"; }

AbelianExtension::AbelianExtension(SystemHom inclusion, SystemHom projection)
    : inclusion_(std::move(inclusion)), projection_(std::move(projection)) {
  if (!same_system(inclusion_.target(), projection_.source()))
    throw ParentMismatch("AbelianExtension: inclusion and projection are not composable");
  const auto& nerve = *kernel()->nerve();
  for (std::size_t id = 0; id < nerve.face_count(); ++id) {
    const auto where = " on face " + face_to_string(nerve.face(id));
    const GroupHom& i = inclusion_.at(id);
    const GroupHom& p = projection_.at(id);
    if (!is_injective(i)) throw ExactnessViolation("A -> E is not injective" + where);
    if (!is_surjective(p)) throw ExactnessViolation("E -> G is not surjective" + where);
    if (!is_exact(i, p)) throw ExactnessViolation("image of A is not the kernel of E -> G" + where);
  }
}

Bundle AbelianExtension::mul(std::size_t, const Bundle& x, const Bundle& y) const {
  return {x.at(0) + y.at(0)};
}

Bundle AbelianExtension::inv(std::size_t, const Bundle& x) const { return {-x.at(0)}; }

Bundle AbelianExtension::section(std::size_t face, const GroupElement& g) const {
  auto lift = preimage(projection_.at(face), g);
  ensure(lift.has_value(), "AbelianExtension: projection is not surjective");
  return {*lift};
}

GroupElement AbelianExtension::project(std::size_t face, const Bundle& e) const {
  return projection_.at(face)(e.at(0));
}

Bundle AbelianExtension::include(std::size_t face, const GroupElement& a) const {
  return {inclusion_.at(face)(a)};
}

GroupElement AbelianExtension::kernel_part(std::size_t face, const Bundle& e) const {
  auto a = preimage(inclusion_.at(face), e.at(0));
  ensure(a.has_value(), "AbelianExtension: element is not in the kernel");
  return *a;
}

Bundle AbelianExtension::restrict(std::size_t face, std::size_t k, const Bundle& e) const {
  return {total()->immediate(face, k)(e.at(0))};
}

std::string AbelianExtension::describe() const { return "abelian extension"; }

PerturbedSection::PerturbedSection(std::shared_ptr<const CentralExtension> inner, Shift shift)
    : inner_(std::move(inner)), shift_(std::move(shift)) {}

Bundle PerturbedSection::section(std::size_t face, const GroupElement& g) const {
  return inner_->mul(face, inner_->section(face, g), inner_->include(face, shift_(face, g)));
}

PerturbedSection::Shift random_shift(const SystemPtr& kernel, std::uint64_t seed) {
  return [kernel, seed](std::size_t face, const GroupElement& g) {
    // FNV-1a over the face id and the coordinates.
    std::uint64_t h = 1469598103934665603ull ^ seed;
    auto mix = [&h](const std::string& s) {
      for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
      }
      h ^= 0xff;
      h *= 1099511628211ull;
    };
    mix(std::to_string(face));
    for (const auto& c : g.coords()) mix(c.get_str());
    Rng rng(h);
    return random_element(kernel->group_at(face), rng, 3);
  };
}

}  // namespace gf
