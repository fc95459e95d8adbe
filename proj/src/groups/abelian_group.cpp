#include "gerbeforge/groups/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gerbeforge/error.hpp"
#include "gerbeforge/groups/lattice.hpp"

namespace gf {

FgAbGroup::FgAbGroup(std::vector<Integer> invariant_factors, std::size_t free_rank)
    : torsion_(std::move(invariant_factors)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw InvalidInput("invariant factors must be at least 2");
    if (i + 1 < torsion_.size() &&
        !mpz_divisible_p(torsion_[i + 1].get_mpz_t(), torsion_[i].get_mpz_t()))
      throw InvalidInput("invariant factors must form a divisibility chain");
  }
}

FgAbGroup FgAbGroup::cyclic(long n) {
  if (n < 0) n = -n;
  if (n == 0) return free(1);
  if (n == 1) return {};
  return FgAbGroup({Integer(n)}, 0);
}

FgAbGroup FgAbGroup::free(std::size_t rank) { return FgAbGroup({}, rank); }

FgAbGroup FgAbGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  std::vector<Integer> abs_orders;
  for (const auto& o : orders) abs_orders.push_back(abs(o));
  IntMatrix rel = IntMatrix::diagonal(abs_orders, orders.size(), orders.size());
  return *present(orders.size(), rel).group;
}

FgAbGroup FgAbGroup::parse(const std::string& text) {
  std::vector<Integer> orders;
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw InvalidInput("empty group description");
  std::stringstream ss(compact);
  std::string term;
  while (std::getline(ss, term, '+')) {
    if (term == "0" || term == "1") continue;
    if (term.empty() || term[0] != 'Z') throw InvalidInput("cannot parse group term '" + term + "'");
    if (term == "Z") {
      orders.emplace_back(0);
    } else if (term.size() > 2 && term[1] == '^') {
      long k = std::stol(term.substr(2));
      if (k < 0) throw InvalidInput("negative rank in '" + term + "'");
      for (long i = 0; i < k; ++i) orders.emplace_back(0);
    } else if (term.size() > 2 && term[1] == '/') {
      Integer n;
      if (n.set_str(term.substr(2), 10) != 0 || n <= 0)
        throw InvalidInput("cannot parse cyclic order in '" + term + "'");
      orders.push_back(n);
    } else {
      throw InvalidInput("cannot parse group term '" + term + "'");
    }
  }
  return from_cyclic_orders(orders);
}

std::optional<Integer> FgAbGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

Integer FgAbGroup::modulus(std::size_t i) const {
  return i < torsion_.size() ? torsion_[i] : Integer(0);
}

IntVector FgAbGroup::moduli() const {
  IntVector m(dimension());
  for (std::size_t i = 0; i < torsion_.size(); ++i) m[i] = torsion_[i];
  return m;
}

void FgAbGroup::reduce_in_place(IntVector& coords) const {
  if (coords.size() != dimension())
    throw DimensionMismatch("coordinate vector has " + std::to_string(coords.size()) +
                            " entries, group " + to_string() + " needs " +
                            std::to_string(dimension()));
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    mpz_fdiv_r(coords[i].get_mpz_t(), coords[i].get_mpz_t(), torsion_[i].get_mpz_t());
}

IntVector FgAbGroup::reduce(IntVector coords) const {
  reduce_in_place(coords);
  return coords;
}

IntMatrix FgAbGroup::relation_matrix() const {
  IntMatrix m(dimension(), torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) m(i, i) = torsion_[i];
  return m;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  for (const auto& d : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  if (free_rank_ > 0) {
    if (!out.empty()) out += " + ";
    out += free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  }
  return out;
}

GroupPtr make_group(FgAbGroup g) { return std::make_shared<const FgAbGroup>(std::move(g)); }

GroupPtr trivial_group() {
  static const GroupPtr g = make_group(FgAbGroup());
  return g;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// --- elements ---------------------------------------------------------------

GroupElement::GroupElement(GroupPtr parent, IntVector coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (!parent_) throw InvalidInput("group element without parent");
  parent_->reduce_in_place(coords_);
}

GroupElement GroupElement::zero(GroupPtr parent) {
  const std::size_t n = parent->dimension();
  return GroupElement(std::move(parent), IntVector(n));
}

GroupElement GroupElement::basis(GroupPtr parent, std::size_t i) {
  IntVector v(parent->dimension());
  if (i >= v.size()) throw DimensionMismatch("basis index out of range");
  v[i] = 1;
  return GroupElement(std::move(parent), std::move(v));
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

void require_parent(const GroupElement& x, const GroupPtr& g, const char* where) {
  if (!same_group(x.parent(), g))
    throw ParentMismatch(std::string(where) + ": element of " +
                         (x.parent() ? x.parent()->to_string() : "<none>") +
                         " used where " + g->to_string() + " was expected");
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
  GroupElement out = *this;
  out += rhs;
  return out;
}

GroupElement& GroupElement::operator+=(const GroupElement& rhs) {
  require_parent(rhs, parent_, "GroupElement::operator+");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  parent_->reduce_in_place(coords_);
  return *this;
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const {
  require_parent(rhs, parent_, "GroupElement::operator-");
  IntVector c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coords_[i];
  return GroupElement(parent_, std::move(c));
}

GroupElement GroupElement::operator-() const {
  IntVector c = coords_;
  for (auto& x : c) x = -x;
  return GroupElement(parent_, std::move(c));
}

GroupElement GroupElement::scaled(const Integer& k) const {
  IntVector c = coords_;
  for (auto& x : c) x *= k;
  return GroupElement(parent_, std::move(c));
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return same_group(a.parent_, b.parent_) && a.coords_ == b.coords_;
}

std::string GroupElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].get_str();
  }
  return out + ")";
}

// --- homomorphisms ------------------------------------------------------------

bool respects_torsion(const FgAbGroup& source, const FgAbGroup& target, const IntMatrix& m) {
  if (m.rows() != target.dimension() || m.cols() != source.dimension()) return false;
  Integer prod;
  for (std::size_t j = 0; j < source.torsion_rank(); ++j) {
    const Integer& dj = source.invariant_factors()[j];
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) == 0) continue;
      Integer ti = target.modulus(i);
      if (ti == 0) return false;
      prod = dj * m(i, j);
      if (!mpz_divisible_p(prod.get_mpz_t(), ti.get_mpz_t())) return false;
    }
  }
  return true;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_->dimension() || matrix_.cols() != source_->dimension())
    throw DimensionMismatch("homomorphism matrix must be " + std::to_string(target_->dimension()) +
                            "x" + std::to_string(source_->dimension()));
  if (!respects_torsion(*source_, *target_, matrix_))
    throw InvalidInput("matrix does not define a homomorphism " + source_->to_string() + " -> " +
                       target_->to_string());
  for (std::size_t i = 0; i < target_->torsion_rank(); ++i) {
    const Integer& t = target_->invariant_factors()[i];
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      mpz_fdiv_r(matrix_(i, j).get_mpz_t(), matrix_(i, j).get_mpz_t(), t.get_mpz_t());
  }
}

GroupHom GroupHom::identity(GroupPtr g) {
  const std::size_t n = g->dimension();
  return GroupHom(g, g, IntMatrix::identity(n));
}

GroupHom GroupHom::zero(GroupPtr source, GroupPtr target) {
  IntMatrix m(target->dimension(), source->dimension());
  return GroupHom(std::move(source), std::move(target), std::move(m));
}

GroupElement GroupHom::operator()(const GroupElement& x) const {
  require_parent(x, source_, "GroupHom::operator()");
  return GroupElement(target_, matrix_ * std::span<const Integer>(x.coords()));
}

IntVector GroupHom::apply(std::span<const Integer> coords) const {
  return target_->reduce(matrix_ * coords);
}

bool GroupHom::is_zero() const { return matrix_.is_zero(); }

bool operator==(const GroupHom& a, const GroupHom& b) {
  return same_group(a.source_, b.source_) && same_group(a.target_, b.target_) &&
         a.matrix_ == b.matrix_;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!same_group(f.target(), g.source()))
    throw ParentMismatch("compose: " + f.target()->to_string() + " is not the source " +
                         g.source()->to_string());
  return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

GroupHom operator+(const GroupHom& a, const GroupHom& b) {
  if (!same_group(a.source(), b.source()) || !same_group(a.target(), b.target()))
    throw ParentMismatch("sum of homomorphisms with different source or target");
  return GroupHom(a.source(), a.target(), a.matrix() + b.matrix());
}

Subgroup generated_subgroup(const GroupPtr& g, const IntMatrix& gens) {
  if (gens.rows() != g->dimension()) throw DimensionMismatch("generated_subgroup: wrong generator length");
  IntMatrix kernel = integer_kernel(gens.hstack(g->relation_matrix()));
  IntMatrix rels = kernel.block(0, 0, gens.cols(), kernel.cols());
  Presentation p = present(gens.cols(), rels);
  return {p.group, GroupHom(p.group, g, gens * p.from_normal)};
}

Subgroup hom_kernel(const GroupHom& h) {
  const auto& s = h.source();
  IntMatrix kernel = integer_kernel(h.matrix().hstack(h.target()->relation_matrix()));
  IntMatrix gens = kernel.block(0, 0, s->dimension(), kernel.cols());
  return generated_subgroup(s, gens);
}

Subgroup hom_image(const GroupHom& h) { return generated_subgroup(h.target(), h.matrix()); }

Quotient hom_cokernel(const GroupHom& h) {
  const auto& t = h.target();
  Presentation p = present(t->dimension(), t->relation_matrix().hstack(h.matrix()));
  return {p.group, GroupHom(t, p.group, p.to_normal), p.from_normal};
}

bool is_injective(const GroupHom& h) { return hom_kernel(h).group->is_trivial(); }
bool is_surjective(const GroupHom& h) { return hom_cokernel(h).group->is_trivial(); }

std::optional<GroupElement> preimage(const GroupHom& h, const GroupElement& y) {
  require_parent(y, h.target(), "preimage");
  IntVector mods = h.target()->moduli();
  auto x = solve(h.matrix(), y.coords(), mods);
  if (!x) return std::nullopt;
  return GroupElement(h.source(), std::move(*x));
}

DirectSum direct_sum(const std::vector<GroupPtr>& summands) {
  std::vector<Integer> naive_moduli;
  std::vector<std::size_t> offsets;
  std::size_t n = 0;
  for (const auto& s : summands) {
    offsets.push_back(n);
    n += s->dimension();
    IntVector m = s->moduli();
    naive_moduli.insert(naive_moduli.end(), m.begin(), m.end());
  }
  // Naive coordinates already in normal form: torsion chain, free coordinates last.
  bool normal = true;
  for (std::size_t i = 0; i + 1 < n && normal; ++i) {
    const Integer& a = naive_moduli[i];
    const Integer& b = naive_moduli[i + 1];
    if (a == 0 && b != 0) normal = false;
    if (a != 0 && b != 0 && !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) normal = false;
  }
  IntMatrix to_normal, from_normal;
  GroupPtr group;
  if (normal) {
    std::vector<Integer> torsion;
    std::size_t free_rank = 0;
    for (const auto& m : naive_moduli) {
      if (m == 0) ++free_rank;
      else torsion.push_back(m);
    }
    group = make_group(FgAbGroup(torsion, free_rank));
    to_normal = IntMatrix::identity(n);
    from_normal = IntMatrix::identity(n);
  } else {
    IntMatrix rel(n, 0);
    std::vector<IntMatrix> blocks;
    for (const auto& s : summands) blocks.push_back(s->relation_matrix());
    rel = block_diagonal(blocks);
    Presentation p = present(n, rel);
    group = p.group;
    to_normal = std::move(p.to_normal);
    from_normal = std::move(p.from_normal);
  }
  DirectSum out;
  out.group = group;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const std::size_t dk = summands[k]->dimension();
    out.injections.emplace_back(summands[k], group, to_normal.block(0, offsets[k], group->dimension(), dk));
    out.projections.emplace_back(group, summands[k], from_normal.block(offsets[k], 0, dk, group->dimension()));
  }
  return out;
}

FgAbGroup cokernel(const IntMatrix& m) { return *present(m.cols(), m.transpose()).group; }

void for_each_element(const GroupPtr& g, const std::function<void(const GroupElement&)>& fn) {
  if (!g->is_finite()) throw InvalidInput("cannot enumerate the infinite group " + g->to_string());
  const auto& d = g->invariant_factors();
  IntVector c(d.size());
  for (;;) {
    fn(GroupElement(g, c));
    std::size_t i = d.size();
    while (i > 0) {
      --i;
      c[i] += 1;
      if (c[i] < d[i]) break;
      c[i] = 0;
      if (i == 0) return;
    }
    if (d.empty()) return;
  }
}

std::vector<GroupElement> all_elements(const GroupPtr& g) {
  std::vector<GroupElement> out;
  for_each_element(g, [&](const GroupElement& x) { out.push_back(x); });
  return out;
}

std::size_t element_index(const GroupElement& x) {
  const auto& g = *x.parent();
  if (!g.is_finite()) throw InvalidInput("element_index on an infinite group");
  std::size_t index = 0;
  for (std::size_t i = 0; i < g.torsion_rank(); ++i)
    index = index * g.invariant_factors()[i].get_ui() + x.coords()[i].get_ui();
  return index;
}

GroupElement element_at(const GroupPtr& g, std::size_t index) {
  if (!g->is_finite()) throw InvalidInput("element_at on an infinite group");
  const auto& d = g->invariant_factors();
  IntVector c(d.size());
  for (std::size_t i = d.size(); i > 0; --i) {
    const unsigned long di = d[i - 1].get_ui();
    c[i - 1] = static_cast<unsigned long>(index % di);
    index /= di;
  }
  return GroupElement(g, std::move(c));
}

}  // namespace gf

namespace gf {

bool is_exact(const GroupHom& f, const GroupHom& g) {
  if (!same_group(f.target(), g.source())) throw ParentMismatch("is_exact: maps are not composable");
  if (!compose(g, f).is_zero()) return false;
  const Subgroup k = hom_kernel(g);
  for (std::size_t i = 0; i < k.group->dimension(); ++i)
    if (!preimage(f, k.inclusion(GroupElement::basis(k.group, i)))) return false;
  return true;
}

}  // namespace gf
