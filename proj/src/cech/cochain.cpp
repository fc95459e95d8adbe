#include "gerbeforge/cech/cochain.hpp"

#include "gerbeforge/error.hpp"
#include "gerbeforge/parallel.hpp"

namespace gf {
namespace {

void require_degree(int p, int lo, int hi, const char* where) {
  if (p < lo || p > hi)
    throw InvalidInput(std::string(where) + ": degree " + std::to_string(p) + " outside " +
                       std::to_string(lo) + ".." + std::to_string(hi));
}

}  // namespace

Cochain::Cochain(SystemPtr system, int degree, std::vector<GroupElement> components)
    : system_(std::move(system)), degree_(degree), components_(std::move(components)) {
  require_degree(degree_, 0, CoverNerve::max_dimension, "Cochain");
  const auto& faces = system_->nerve()->faces_of_dimension(degree_);
  if (components_.size() != faces.size())
    throw DimensionMismatch("Cochain of degree " + std::to_string(degree_) + " needs " +
                            std::to_string(faces.size()) + " components");
  for (std::size_t i = 0; i < faces.size(); ++i)
    require_parent(components_[i], system_->group_at(faces[i]), "Cochain component");
}

Cochain Cochain::zero(SystemPtr system, int degree) {
  require_degree(degree, 0, CoverNerve::max_dimension, "Cochain::zero");
  std::vector<GroupElement> comps;
  for (std::size_t id : system->nerve()->faces_of_dimension(degree))
    comps.push_back(GroupElement::zero(system->group_at(id)));
  return Cochain(std::move(system), degree, std::move(comps));
}

Cochain Cochain::from_coordinates(SystemPtr system, int degree, std::span<const Integer> coords) {
  require_degree(degree, 0, CoverNerve::max_dimension, "Cochain::from_coordinates");
  if (coords.size() != system->cochain_dimension(degree))
    throw DimensionMismatch("cochain coordinate vector has the wrong length");
  std::vector<GroupElement> comps;
  const auto& faces = system->nerve()->faces_of_dimension(degree);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto begin = coords.begin() + static_cast<std::ptrdiff_t>(system->offset(degree, i));
    const auto end = coords.begin() + static_cast<std::ptrdiff_t>(system->offset(degree, i + 1));
    comps.emplace_back(system->group_at(faces[i]), IntVector(begin, end));
  }
  return Cochain(std::move(system), degree, std::move(comps));
}

Cochain Cochain::random(SystemPtr system, int degree, Rng& rng, long free_range) {
  std::vector<GroupElement> comps;
  for (std::size_t id : system->nerve()->faces_of_dimension(degree))
    comps.push_back(random_element(system->group_at(id), rng, free_range));
  return Cochain(std::move(system), degree, std::move(comps));
}

const GroupElement& Cochain::at(const Face& f) const {
  if (static_cast<int>(f.size()) != degree_ + 1)
    throw InvalidInput("face " + face_to_string(f) + " has the wrong size for this cochain");
  return components_[system_->nerve()->position(system_->nerve()->id(f))];
}

std::size_t Cochain::face_id(std::size_t position) const {
  return system_->nerve()->faces_of_dimension(degree_)[position];
}

IntVector Cochain::coordinates() const {
  IntVector out;
  out.reserve(system_->cochain_dimension(degree_));
  for (const auto& c : components_) out.insert(out.end(), c.coords().begin(), c.coords().end());
  return out;
}

bool Cochain::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

void Cochain::require_compatible(const Cochain& rhs, const char* where) const {
  if (degree_ != rhs.degree_) throw ParentMismatch(std::string(where) + ": degrees differ");
  if (!same_system(system_, rhs.system_))
    throw ParentMismatch(std::string(where) + ": cochains belong to different systems");
}

Cochain Cochain::operator+(const Cochain& rhs) const {
  require_compatible(rhs, "Cochain +");
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < components_.size(); ++i) out.push_back(components_[i] + rhs.components_[i]);
  return Cochain(system_, degree_, std::move(out));
}

Cochain Cochain::operator-(const Cochain& rhs) const { return *this + (-rhs); }

Cochain Cochain::operator-() const {
  std::vector<GroupElement> out;
  for (const auto& c : components_) out.push_back(-c);
  return Cochain(system_, degree_, std::move(out));
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.degree_ == b.degree_ && same_system(a.system_, b.system_) &&
         a.components_ == b.components_;
}

std::string Cochain::to_string() const {
  std::string s;
  const auto& nerve = *system_->nerve();
  const auto& faces = nerve.faces_of_dimension(degree_);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) s += " ";
    s += face_to_string(nerve.face(faces[i])) + ":" + components_[i].to_string();
  }
  return s;
}

Cochain differential(const Cochain& c, Execution execution) {
  const int p = c.degree();
  require_degree(p, 0, CoverNerve::max_dimension - 1, "differential");
  const auto& sys = *c.system();
  const auto& nerve = *sys.nerve();
  const auto& targets = nerve.faces_of_dimension(p + 1);
  auto face_value = [&](std::size_t t) {
    const std::size_t id = targets[t];
    const Face& f = nerve.face(id);
    GroupElement acc = GroupElement::zero(sys.group_at(id));
    for (std::size_t k = 0; k < f.size(); ++k) {
      const GroupElement& src = c[nerve.position(nerve.id(omit(f, k)))];
      GroupElement term = sys.immediate(id, k)(src);
      acc += k % 2 == 0 ? term : -term;
    }
    return acc;
  };

  auto out = indexed_map<GroupElement>(targets.size(), execution, face_value);
  return Cochain(c.system(), p + 1, std::move(out));
}

bool is_cocycle(const Cochain& c, Execution execution) {
  if (c.degree() >= CoverNerve::max_dimension) return true;
  return differential(c, execution).is_zero();
}

IntMatrix differential_matrix(const CoefficientSystem& s, int p) {
  require_degree(p, 0, CoverNerve::max_dimension - 1, "differential_matrix");
  const auto& nerve = *s.nerve();
  IntMatrix m(s.cochain_dimension(p + 1), s.cochain_dimension(p));
  const auto& targets = nerve.faces_of_dimension(p + 1);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const Face& f = nerve.face(targets[t]);
    for (std::size_t k = 0; k < f.size(); ++k) {
      const std::size_t src = nerve.position(nerve.id(omit(f, k)));
      const IntMatrix& r = s.immediate(targets[t], k).matrix();
      const long sign = k % 2 == 0 ? 1 : -1;
      const std::size_t r0 = s.offset(p + 1, t), c0 = s.offset(p, src);
      for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) m(r0 + i, c0 + j) += sign * r(i, j);
    }
  }
  return m;
}

Cochain baer_sum(const Cochain& p, const Cochain& q) {
  if (!same_system(p.system(), q.system()) || p.degree() != q.degree())
    throw ParentMismatch("baer_sum: cocycles of different systems or degrees");
  return p + q;
}

Cochain cup(const Cochain& a, const Cochain& b, const TensorSystem& t, Execution execution) {
  if (a.degree() != 1 || b.degree() != 1) throw InvalidInput("cup: both inputs must be 1-cochains");
  if (!same_system(a.system(), t.left) || !same_system(b.system(), t.right))
    throw ParentMismatch("cup: cochains do not match the tensor system");
  const auto& nerve = *t.system->nerve();
  const auto& triples = nerve.faces_of_dimension(2);
  // omit(ijk, 2) = ij and omit(ijk, 0) = jk.
  auto face_value = [&](std::size_t pos) {
    const std::size_t id = triples[pos];
    const Face& f = nerve.face(id);
    const std::size_t ij = nerve.id(omit(f, 2)), jk = nerve.id(omit(f, 0));
    const GroupElement left = a.system()->immediate(id, 2)(a[nerve.position(ij)]);
    const GroupElement right = b.system()->immediate(id, 0)(b[nerve.position(jk)]);
    return t.products[id](left, right);
  };

  auto out = indexed_map<GroupElement>(triples.size(), execution, face_value);
  return Cochain(t.system, 2, std::move(out));
}

Cochain push_forward(const SystemHom& h, const Cochain& c) {
  if (!same_system(h.source(), c.system()))
    throw ParentMismatch("push_forward: cochain does not live on the source system");
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(h.at(c.face_id(i))(c[i]));
  return Cochain(h.target(), c.degree(), std::move(out));
}

}  // namespace gf
