#pragma once

#include <string>
#include <vector>

#include "gerbeforge/cech/system.hpp"
#include "gerbeforge/execution.hpp"
#include "gerbeforge/random.hpp"

namespace gf {

// Values on the ordered faces i0 < ... < ip of a nerve; the alternating
// extension to other orderings is implicit.
class Cochain {
 public:
  Cochain(SystemPtr system, int degree, std::vector<GroupElement> components);

  static Cochain zero(SystemPtr system, int degree);
  static Cochain from_coordinates(SystemPtr system, int degree, std::span<const Integer> coords);
  static Cochain random(SystemPtr system, int degree, Rng& rng, long free_range = 4);

  const SystemPtr& system() const { return system_; }
  int degree() const { return degree_; }
  std::size_t size() const { return components_.size(); }
  const std::vector<GroupElement>& components() const { return components_; }
  // By position among faces of this degree.
  const GroupElement& operator[](std::size_t position) const { return components_[position]; }
  const GroupElement& at(const Face& f) const;
  // Global face id of a position.
  std::size_t face_id(std::size_t position) const;

  IntVector coordinates() const;
  bool is_zero() const;

  Cochain operator+(const Cochain& rhs) const;
  Cochain operator-(const Cochain& rhs) const;
  Cochain operator-() const;

  friend bool operator==(const Cochain& a, const Cochain& b);

  std::string to_string() const;

 private:
  void require_compatible(const Cochain& rhs, const char* where) const;

  SystemPtr system_;
  int degree_ = 0;
  std::vector<GroupElement> components_;
};

// (dc)(i0..i_{p+1}) = sum_k (-1)^k res(c(i0..^ik..i_{p+1})). Degree <= 2.
Cochain differential(const Cochain& c, Execution execution = Execution::parallel);
bool is_cocycle(const Cochain& c, Execution execution = Execution::parallel);

// Matrix of the differential C^p -> C^{p+1} on concatenated coordinates.
IntMatrix differential_matrix(const CoefficientSystem& s, int p);

// Componentwise sum of two cocycles of the same system and degree.
Cochain baer_sum(const Cochain& p, const Cochain& q);

// (a cup b)(i,j,k) = res(a(i,j)) (x) res(b(j,k)) in the tensor system.
Cochain cup(const Cochain& a, const Cochain& b, const TensorSystem& t,
            Execution execution = Execution::parallel);

// Facewise image under a system homomorphism.
Cochain push_forward(const SystemHom& h, const Cochain& c);

}  // namespace gf
