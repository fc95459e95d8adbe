#pragma once

#include "gerbeforge/cech/system.hpp"

namespace gf {

struct SubSystem {
  SystemPtr system;
  SystemHom inclusion;
};

struct QuotientSystem {
  SystemPtr system;
  SystemHom projection;
};

// Facewise image of h with the induced restrictions, and the corestriction
// of h onto it.
struct ImageFactorization {
  SubSystem image;
  SystemHom corestriction;  // source -> image
};

ImageFactorization image_system(const SystemHom& h);
QuotientSystem cokernel_system(const SystemHom& h);

// The cover-flasque system F^ with F^(S) = sum of F(S u {i}) over the
// indices i with S u {i} a face, and the diagonal inclusion F -> F^.
SubSystem godement(const SystemPtr& f);

// Exact 0 -> A -> L1 -> L0 -> B -> 0 of coefficient systems, validated
// facewise at construction (ExactnessViolation names the face).
class FourTermComplex {
 public:
  FourTermComplex(SystemHom iota, SystemHom del, SystemHom p);

  const SystemPtr& a() const { return iota_.source(); }
  const SystemPtr& l1() const { return iota_.target(); }
  const SystemPtr& l0() const { return del_.target(); }
  const SystemPtr& b() const { return p_.target(); }
  const SystemHom& iota() const { return iota_; }
  const SystemHom& del() const { return del_; }
  const SystemHom& p() const { return p_; }
  const NervePtr& nerve() const { return a()->nerve(); }

 private:
  SystemHom iota_;
  SystemHom del_;
  SystemHom p_;
};

// C = im del with L1 -> C -> L0; pi is onto, j is into, j pi = del.
struct MiddleImage {
  SystemPtr c;
  SystemHom pi;
  SystemHom j;
};

MiddleImage splice(const FourTermComplex& ft);

// A -> A^ -> (A^/A)^ -> (A^/A)^/(A^/A): two Godement steps spliced at A^/A.
FourTermComplex godement_complex(const SystemPtr& a);

}  // namespace gf
