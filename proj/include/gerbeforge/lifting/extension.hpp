#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gerbeforge/cech/cochain.hpp"
#include "gerbeforge/heisenberg/heisenberg.hpp"

namespace gf {

// An element of E on one face, as a tuple of group elements.
using Bundle = std::vector<GroupElement>;

// A facewise central extension 0 -> A -> E -> G -> 0 of coefficient systems
// with abelian G, given by its law and a set-theoretic section s of E -> G.
class CentralExtension {
 public:
  virtual ~CentralExtension() = default;

  virtual const SystemPtr& kernel() const = 0;  // A
  virtual const SystemPtr& base() const = 0;    // G

  virtual Bundle mul(std::size_t face, const Bundle& x, const Bundle& y) const = 0;
  virtual Bundle inv(std::size_t face, const Bundle& x) const = 0;
  virtual Bundle section(std::size_t face, const GroupElement& g) const = 0;
  virtual GroupElement project(std::size_t face, const Bundle& e) const = 0;
  virtual Bundle include(std::size_t face, const GroupElement& a) const = 0;
  // The a with include(a) == e. Throws InvariantBreach when e is not in A.
  virtual GroupElement kernel_part(std::size_t face, const Bundle& e) const = 0;
  // Restriction from omit(face, k) to face.
  virtual Bundle restrict(std::size_t face, std::size_t k, const Bundle& e) const = 0;

  virtual std::string describe() const = 0;

  const NervePtr& nerve() const { return kernel()->nerve(); }
};

// H_{A,B} facewise over the systems A and B, kernel A(x)B, base A(+)B,
// section (a, b) -> (a, b, 0).
class HeisenbergExtension final : public CentralExtension {
 public:
  HeisenbergExtension(SystemPtr a, SystemPtr b);

  const SystemPtr& kernel() const override { return tensor_.system; }
  const SystemPtr& base() const override { return base_; }
  const TensorSystem& tensor() const { return tensor_; }
  const SystemPtr& a_system() const { return tensor_.left; }
  const SystemPtr& b_system() const { return tensor_.right; }
  const HeisenbergGroup& group_at(std::size_t face) const { return groups_[face]; }

  // The base cochain (p, q) in A(+)B from an A-cochain and a B-cochain.
  Cochain pair(const Cochain& p, const Cochain& q) const;

  Bundle mul(std::size_t face, const Bundle& x, const Bundle& y) const override;
  Bundle inv(std::size_t face, const Bundle& x) const override;
  Bundle section(std::size_t face, const GroupElement& g) const override;
  GroupElement project(std::size_t face, const Bundle& e) const override;
  Bundle include(std::size_t face, const GroupElement& t) const override;
  GroupElement kernel_part(std::size_t face, const Bundle& e) const override;
  Bundle restrict(std::size_t face, std::size_t k, const Bundle& e) const override;
  std::string describe() const override;

 private:
  static HeisenbergElement unpack(const Bundle& e);
  static Bundle pack(const HeisenbergElement& h);

  TensorSystem tensor_;
  SystemPtr base_;
  std::vector<DirectSum> sums_;
  std::vector<HeisenbergGroup> groups_;
};

// A short exact sequence of abelian systems A -> E -> G (validated facewise);
// the section picks the preimage returned by the exact solver.
class AbelianExtension final : public CentralExtension {
 public:
  AbelianExtension(SystemHom inclusion, SystemHom projection);

  const SystemPtr& kernel() const override { return inclusion_.source(); }
  const SystemPtr& base() const override { return projection_.target(); }
  const SystemPtr& total() const { return inclusion_.target(); }
  const SystemHom& inclusion() const { return inclusion_; }
  const SystemHom& projection() const { return projection_; }

  Bundle mul(std::size_t face, const Bundle& x, const Bundle& y) const override;
  Bundle inv(std::size_t face, const Bundle& x) const override;
  Bundle section(std::size_t face, const GroupElement& g) const override;
  GroupElement project(std::size_t face, const Bundle& e) const override;
  Bundle include(std::size_t face, const GroupElement& a) const override;
  GroupElement kernel_part(std::size_t face, const Bundle& e) const override;
  Bundle restrict(std::size_t face, std::size_t k, const Bundle& e) const override;
  std::string describe() const override;

 private:
  SystemHom inclusion_;
  SystemHom projection_;
};

// Same extension with section s'(g) = s(g) + include(shift(face, g)).
class PerturbedSection final : public CentralExtension {
 public:
  using Shift = std::function<GroupElement(std::size_t face, const GroupElement& g)>;

  PerturbedSection(std::shared_ptr<const CentralExtension> inner, Shift shift);

  const SystemPtr& kernel() const override { return inner_->kernel(); }
  const SystemPtr& base() const override { return inner_->base(); }

  Bundle mul(std::size_t face, const Bundle& x, const Bundle& y) const override {
    return inner_->mul(face, x, y);
  }
  Bundle inv(std::size_t face, const Bundle& x) const override { return inner_->inv(face, x); }
  Bundle section(std::size_t face, const GroupElement& g) const override;
  GroupElement project(std::size_t face, const Bundle& e) const override {
    return inner_->project(face, e);
  }
  Bundle include(std::size_t face, const GroupElement& a) const override {
    return inner_->include(face, a);
  }
  GroupElement kernel_part(std::size_t face, const Bundle& e) const override {
    return inner_->kernel_part(face, e);
  }
  Bundle restrict(std::size_t face, std::size_t k, const Bundle& e) const override {
    return inner_->restrict(face, k, e);
  }
  std::string describe() const override { return inner_->describe() + " (perturbed section)"; }

 private:
  std::shared_ptr<const CentralExtension> inner_;
  Shift shift_;
};

// A shift that is an arbitrary (non-additive) function of (face, g), drawn
// from a seed; used to test section independence.
PerturbedSection::Shift random_shift(const SystemPtr& kernel, std::uint64_t seed);

}  // namespace gf
