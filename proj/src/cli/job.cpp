#include "gerbeforge/cli/job.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <variant>

#include <omp.h>

#include "gerbeforge/acceptance.hpp"
#include "gerbeforge/cech/fixtures.hpp"
#include "gerbeforge/error.hpp"
#include "gerbeforge/fourterm/library.hpp"
#include "gerbeforge/heisenberg/verify.hpp"
#include "gerbeforge/lifting/boundary.hpp"
#include "gerbeforge/simplicial/alexander_whitney.hpp"
#include "gerbeforge/symbols/picard.hpp"
#include "gerbeforge/symbols/symbols.hpp"

namespace gf::cli {
namespace {

// --- definitions ------------------------------------------------------------

using Value = std::variant<GroupPtr, NervePtr, SystemPtr, std::shared_ptr<const SystemHom>,
                           std::shared_ptr<const Cochain>, std::shared_ptr<const HeisenbergExtension>,
                           std::shared_ptr<const AbelianExtension>, std::shared_ptr<const FourTermComplex>,
                           std::shared_ptr<const RationalFunction>, std::shared_ptr<const Place>,
                           std::shared_ptr<const Divisor>>;

template <class T>
struct KindName;
template <> struct KindName<GroupPtr> { static constexpr const char* value = "group"; };
template <> struct KindName<NervePtr> { static constexpr const char* value = "nerve"; };
template <> struct KindName<SystemPtr> { static constexpr const char* value = "system"; };
template <> struct KindName<std::shared_ptr<const SystemHom>> { static constexpr const char* value = "hom"; };
template <> struct KindName<std::shared_ptr<const Cochain>> { static constexpr const char* value = "cochain"; };
template <> struct KindName<std::shared_ptr<const HeisenbergExtension>> {
  static constexpr const char* value = "heisenberg_extension";
};
template <> struct KindName<std::shared_ptr<const AbelianExtension>> {
  static constexpr const char* value = "abelian_extension";
};
template <> struct KindName<std::shared_ptr<const FourTermComplex>> { static constexpr const char* value = "fourterm"; };
template <> struct KindName<std::shared_ptr<const RationalFunction>> { static constexpr const char* value = "function"; };
template <> struct KindName<std::shared_ptr<const Place>> { static constexpr const char* value = "place"; };
template <> struct KindName<std::shared_ptr<const Divisor>> { static constexpr const char* value = "divisor"; };

Rng named_rng(std::uint64_t seed, const std::string& name) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (unsigned char c : name) words.push_back(c);
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

long field_characteristic(const Json& def, const std::string& where) {
  const long p = long_from_json(member(def, "p", where), where + ".p");
  if (p < 2 || p > 97 || !is_prime(p)) throw SchemaError(where + ": p must be a prime <= 97");
  return p;
}

// Builds definitions on first use, detecting cycles and unknown names.
class Definitions {
 public:
  Definitions(const Json& list, std::uint64_t seed) : seed_(seed) {
    if (!list.is_array()) throw SchemaError("definitions: expected a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "definitions[" + std::to_string(i) + "]";
      const Json& d = list[i];
      if (!d.is_object()) throw SchemaError(where + ": expected an object");
      const Json& name = member(d, "name", where);
      if (!name.is_string() || name.get<std::string>().empty())
        throw SchemaError(where + ": name must be a nonempty string");
      if (!raw_.emplace(name.get<std::string>(), &d).second)
        throw SchemaError(where + ": duplicate definition \"" + name.get<std::string>() + "\"");
      order_.push_back(name.get<std::string>());
    }
    for (const auto& n : order_) build(n);
  }

  template <class T>
  T get(const Json& ref, const std::string& where) {
    if (!ref.is_string()) throw SchemaError(where + ": expected the name of a " + KindName<T>::value);
    const std::string name = ref.get<std::string>();
    if (!raw_.count(name)) throw SchemaError(where + ": unresolved reference \"" + name + "\"");
    const Value& v = build(name);
    if (const T* out = std::get_if<T>(&v)) return *out;
    throw SchemaError(where + ": \"" + name + "\" is not a " + KindName<T>::value);
  }

  // A group given inline ("Z/2") or by the name of a group definition;
  // names of other kinds are read as group text.
  GroupPtr group(const Json& ref, const std::string& where) {
    if (ref.is_string()) {
      const auto it = raw_.find(ref.get<std::string>());
      if (it != raw_.end() && it->second->value("kind", "") == "group") return get<GroupPtr>(ref, where);
    }
    return make_group(group_from_json(ref, where));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  const Value& build(const std::string& name) {
    if (auto it = built_.find(name); it != built_.end()) return it->second;
    if (!active_.insert(name).second) throw SchemaError("definition cycle through \"" + name + "\"");
    const Json& d = *raw_.at(name);
    const std::string where = "definition \"" + name + "\"";
    Value v;
    try {
      v = make(name, d, where);
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      throw SchemaError(where + ": " + e.what());
    }
    active_.erase(name);
    return built_.emplace(name, std::move(v)).first->second;
  }

  Value make(const std::string& name, const Json& d, const std::string& where) {
    const Json& kind_json = member(d, "kind", where);
    if (!kind_json.is_string()) throw SchemaError(where + ": kind must be a string");
    const std::string kind = kind_json.get<std::string>();
    if (kind == "group") {
      allow_only(d, {"name", "kind", "value"}, where);
      return make_group(group_from_json(member(d, "value", where), where + ".value"));
    }
    if (kind == "nerve") return make_nerve_def(d, where);
    if (kind == "system") return make_system_def(d, where);
    if (kind == "hom") return make_hom_def(d, where);
    if (kind == "cochain") return make_cochain_def(name, d, where);
    if (kind == "heisenberg_extension") {
      allow_only(d, {"name", "kind", "a", "b"}, where);
      return std::make_shared<const HeisenbergExtension>(get<SystemPtr>(member(d, "a", where), where + ".a"),
                                                         get<SystemPtr>(member(d, "b", where), where + ".b"));
    }
    if (kind == "abelian_extension") {
      allow_only(d, {"name", "kind", "inclusion", "projection"}, where);
      const auto i = get<std::shared_ptr<const SystemHom>>(member(d, "inclusion", where), where + ".inclusion");
      const auto p = get<std::shared_ptr<const SystemHom>>(member(d, "projection", where), where + ".projection");
      return std::make_shared<const AbelianExtension>(*i, *p);
    }
    if (kind == "fourterm") return make_fourterm_def(d, where);
    if (kind == "function") {
      allow_only(d, {"name", "kind", "p", "numerator", "denominator"}, where);
      const long p = field_characteristic(d, where);
      const Poly num = poly_from_json(p, member(d, "numerator", where), where + ".numerator");
      const Poly den = d.contains("denominator") ? poly_from_json(p, d["denominator"], where + ".denominator")
                                                 : Poly::constant(p, 1);
      return std::make_shared<const RationalFunction>(num, den);
    }
    if (kind == "place") {
      allow_only(d, {"name", "kind", "p", "value"}, where);
      const long p = field_characteristic(d, where);
      return std::make_shared<const Place>(place_from_json(p, member(d, "value", where), where + ".value"));
    }
    if (kind == "divisor") {
      allow_only(d, {"name", "kind", "p", "terms"}, where);
      const long p = field_characteristic(d, where);
      const Json& terms = member(d, "terms", where);
      if (!terms.is_array()) throw SchemaError(where + ".terms: expected a list");
      Divisor div;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string at = where + ".terms[" + std::to_string(i) + "]";
        allow_only(terms[i], {"place", "n"}, at);
        div.add(place_from_json(p, member(terms[i], "place", at), at + ".place"),
                long_from_json(member(terms[i], "n", at), at + ".n"));
      }
      return std::make_shared<const Divisor>(std::move(div));
    }
    throw SchemaError(where + ": unknown kind \"" + kind + "\"");
  }

  Value make_nerve_def(const Json& d, const std::string& where) {
    allow_only(d, {"name", "kind", "preset", "indices", "maximal_faces"}, where);
    if (d.contains("preset")) {
      if (!d["preset"].is_string()) throw SchemaError(where + ".preset: expected a string");
      return make_nerve(nerve_preset(d["preset"].get<std::string>()));
    }
    const long n = long_from_json(member(d, "indices", where), where + ".indices");
    if (n < 1 || n > 64) throw SchemaError(where + ".indices: must be in 1..64");
    std::vector<Face> maximal;
    if (d.contains("maximal_faces")) {
      const Json& faces = d["maximal_faces"];
      if (!faces.is_array()) throw SchemaError(where + ".maximal_faces: expected a list");
      for (std::size_t i = 0; i < faces.size(); ++i)
        maximal.push_back(face_from_json(faces[i], where + ".maximal_faces[" + std::to_string(i) + "]"));
    }
    return make_nerve(CoverNerve::from_maximal_faces(static_cast<int>(n), maximal));
  }

  Value make_system_def(const Json& d, const std::string& where) {
    allow_only(d, {"name", "kind", "nerve", "constant", "gcd_orders", "twisted", "direct_sum", "faces",
                   "restrictions"},
               where);
    if (d.contains("twisted")) return make_system(mobius_system(group(d["twisted"], where + ".twisted")));
    if (d.contains("direct_sum")) {
      const Json& parts = d["direct_sum"];
      if (!parts.is_array() || parts.size() != 2) throw SchemaError(where + ".direct_sum: expected two systems");
      return make_system(direct_sum_system(get<SystemPtr>(parts[0], where + ".direct_sum[0]"),
                                           get<SystemPtr>(parts[1], where + ".direct_sum[1]")));
    }
    const NervePtr nerve = get<NervePtr>(member(d, "nerve", where), where + ".nerve");
    if (d.contains("constant")) return make_system(CoefficientSystem::constant(nerve, group(d["constant"], where + ".constant")));
    if (d.contains("gcd_orders")) {
      std::vector<long> orders;
      const IntVector v = vector_from_json(d["gcd_orders"], where + ".gcd_orders");
      for (const auto& x : v) orders.push_back(x.get_si());
      return make_system(gcd_system(nerve, orders));
    }
    // General form: a group on every face and a matrix for every facet inclusion.
    const Json& faces = member(d, "faces", where);
    if (!faces.is_array()) throw SchemaError(where + ".faces: expected a list");
    std::map<Face, GroupPtr> groups;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const std::string at = where + ".faces[" + std::to_string(i) + "]";
      allow_only(faces[i], {"face", "group"}, at);
      const Face f = face_from_json(member(faces[i], "face", at), at + ".face");
      if (!nerve->contains(f)) throw SchemaError(at + ": " + face_to_string(f) + " is not in the nerve");
      groups[f] = group(member(faces[i], "group", at), at + ".group");
    }
    for (std::size_t id = 0; id < nerve->face_count(); ++id)
      if (!groups.count(nerve->face(id)))
        throw SchemaError(where + ".faces: no group for face " + face_to_string(nerve->face(id)));
    std::map<std::pair<Face, Face>, const Json*> matrices;
    if (d.contains("restrictions")) {
      const Json& rs = d["restrictions"];
      if (!rs.is_array()) throw SchemaError(where + ".restrictions: expected a list");
      for (std::size_t i = 0; i < rs.size(); ++i) {
        const std::string at = where + ".restrictions[" + std::to_string(i) + "]";
        allow_only(rs[i], {"from", "to", "matrix"}, at);
        matrices[{face_from_json(member(rs[i], "from", at), at + ".from"),
                  face_from_json(member(rs[i], "to", at), at + ".to")}] = &member(rs[i], "matrix", at);
      }
    }
    return make_system(CoefficientSystem::build(
        nerve, [&](const Face& f) { return groups.at(f); },
        [&](const Face& from, const Face& to) {
          const std::size_t rows = groups.at(to)->dimension(), cols = groups.at(from)->dimension();
          const auto it = matrices.find({from, to});
          if (it == matrices.end()) {
            if (rows == 0 || cols == 0) return IntMatrix(rows, cols);
            throw SchemaError(where + ": missing restriction " + face_to_string(from) + " -> " + face_to_string(to));
          }
          return matrix_from_json(*it->second, rows, cols,
                                  where + " restriction " + face_to_string(from) + " -> " + face_to_string(to));
        }));
  }

  Value make_hom_def(const Json& d, const std::string& where) {
    allow_only(d, {"name", "kind", "source", "target", "matrix", "faces"}, where);
    const SystemPtr s = get<SystemPtr>(member(d, "source", where), where + ".source");
    const SystemPtr t = get<SystemPtr>(member(d, "target", where), where + ".target");
    std::map<Face, const Json*> per_face;
    if (d.contains("faces")) {
      const Json& fs = d["faces"];
      if (!fs.is_array()) throw SchemaError(where + ".faces: expected a list");
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const std::string at = where + ".faces[" + std::to_string(i) + "]";
        allow_only(fs[i], {"face", "matrix"}, at);
        per_face[face_from_json(member(fs[i], "face", at), at + ".face")] = &member(fs[i], "matrix", at);
      }
    }
    const Json* uniform = d.contains("matrix") ? &d["matrix"] : nullptr;
    return std::make_shared<const SystemHom>(SystemHom::build(s, t, [&](const Face& f) {
      const std::size_t rows = t->group_at(f)->dimension(), cols = s->group_at(f)->dimension();
      const auto it = per_face.find(f);
      const Json* m = it != per_face.end() ? it->second : uniform;
      if (!m) {
        if (rows == 0 || cols == 0) return IntMatrix(rows, cols);
        throw SchemaError(where + ": no matrix for face " + face_to_string(f));
      }
      return matrix_from_json(*m, rows, cols, where + " on face " + face_to_string(f));
    }));
  }

  Value make_cochain_def(const std::string& name, const Json& d, const std::string& where) {
    allow_only(d, {"name", "kind", "system", "degree", "values", "class", "generator", "zero", "random"}, where);
    const SystemPtr s = get<SystemPtr>(member(d, "system", where), where + ".system");
    const long degree = long_from_json(member(d, "degree", where), where + ".degree");
    if (degree < 0 || degree > 3) throw SchemaError(where + ".degree: must be in 0..3");
    const int p = static_cast<int>(degree);
    if (d.contains("values")) return std::make_shared<const Cochain>(cochain_from_json(s, p, d["values"], where + ".values"));
    if (d.contains("class")) {
      if (p > 2) throw SchemaError(where + ": classes are available up to degree 2");
      const Cohomology h(s, p);
      IntVector v = vector_from_json(d["class"], where + ".class");
      if (v.size() != h.group()->dimension())
        throw SchemaError(where + ".class: H^" + std::to_string(p) + " = " + h.group()->to_string() + " needs " +
                          std::to_string(h.group()->dimension()) + " coordinates");
      return std::make_shared<const Cochain>(h.representative(GroupElement(h.group(), h.group()->reduce(std::move(v)))));
    }
    if (d.contains("generator")) {
      if (p > 2) throw SchemaError(where + ": generators are available up to degree 2");
      const Cohomology h(s, p);
      const long k = long_from_json(d["generator"], where + ".generator");
      if (k < 0 || static_cast<std::size_t>(k) >= h.group()->dimension())
        throw SchemaError(where + ".generator: H^" + std::to_string(p) + " = " + h.group()->to_string() + " has " +
                          std::to_string(h.group()->dimension()) + " generators");
      return std::make_shared<const Cochain>(h.representative(GroupElement::basis(h.group(), k)));
    }
    if (d.contains("random")) {
      if (p > 2) throw SchemaError(where + ": random cocycles are available up to degree 2");
      Rng rng = named_rng(seed_, name);
      return std::make_shared<const Cochain>(random_cocycle(s, p, rng));
    }
    return std::make_shared<const Cochain>(Cochain::zero(s, p));
  }

  Value make_fourterm_def(const Json& d, const std::string& where) {
    allow_only(d, {"name", "kind", "library", "godement", "iota", "del", "p"}, where);
    if (d.contains("library")) {
      if (!d["library"].is_string()) throw SchemaError(where + ".library: expected a name");
      try {
        return std::make_shared<const FourTermComplex>(library_complex(d["library"].get<std::string>()).complex);
      } catch (const InvalidInput& e) {
        throw SchemaError(where + ".library: " + e.what());
      }
    }
    if (d.contains("godement"))
      return std::make_shared<const FourTermComplex>(godement_complex(get<SystemPtr>(d["godement"], where + ".godement")));
    using HomPtr = std::shared_ptr<const SystemHom>;
    return std::make_shared<const FourTermComplex>(*get<HomPtr>(member(d, "iota", where), where + ".iota"),
                                                   *get<HomPtr>(member(d, "del", where), where + ".del"),
                                                   *get<HomPtr>(member(d, "p", where), where + ".p"));
  }

  std::uint64_t seed_;
  std::map<std::string, const Json*> raw_;
  std::vector<std::string> order_;
  std::map<std::string, Value> built_;
  std::set<std::string> active_;
};

// --- tasks -------------------------------------------------------------------

using Compute = std::function<Json()>;

struct TaskContext {
  Definitions& defs;
  std::uint64_t seed;  // per task
  const std::string where;
};

// Order of a class; null when it has infinite order.
Json class_order(const GroupElement& x) {
  const FgAbGroup& g = *x.parent();
  Integer order = 1;
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    const Integer& c = x.coords()[i];
    if (c == 0) continue;
    const Integer m = g.modulus(i);
    if (m == 0) return nullptr;
    Integer g_cm;
    mpz_gcd(g_cm.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    const Integer k = m / g_cm;
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), k.get_mpz_t());
  }
  return to_json(order);
}

Json class_fields(const GroupPtr& h, const GroupElement& cls) {
  Json out;
  out["group"] = group_text(*h);
  out["class"] = to_json(cls);
  out["class_order"] = class_order(cls);
  out["trivial"] = cls.is_zero();
  return out;
}

Json law_fields(const std::vector<LawCheck>& laws) {
  return Json{{"passed", all_passed(laws)}, {"laws", to_json(laws)}};
}

const std::map<std::string, std::vector<const char*>>& task_keys() {
  static const std::map<std::string, std::vector<const char*>> keys{
      {"cohomology", {"system", "degree"}},
      {"class", {"cochain"}},
      {"cup", {"left", "right"}},
      {"lift", {"left", "right"}},
      {"boundary0", {"extension", "cochain"}},
      {"boundary1", {"extension", "cochain", "left", "right"}},
      {"d2", {"complex", "beta"}},
      {"verify_d2", {"complex", "samples"}},
      {"fiber_groupoid", {"complex", "beta", "face"}},
      {"heisenberg_axioms", {"a", "b"}},
      {"extension_laws", {"a", "b"}},
      {"poonen_rains", {"a"}},
      {"aw_cup", {"a", "b"}},
      {"dold_kan", {"group", "degree"}},
      {"ord", {"place", "function"}},
      {"tame_symbol", {"place", "f", "g"}},
      {"divisor", {"function"}},
      {"weil_reciprocity", {"f", "g"}},
      {"steinberg", {"f"}},
      {"divisor_torsor", {"divisor"}},
      {"acceptance", {"criterion"}},
  };
  return keys;
}

// A global section of B: a cochain name, {"generator": k} or {"class": [...]}
// in H^0(B).
std::shared_ptr<const Cochain> global_section(Definitions& defs, const FourTermComplex& ft, const Json& ref,
                                              const std::string& where) {
  if (ref.is_string()) return defs.get<std::shared_ptr<const Cochain>>(ref, where);
  if (!ref.is_object() || ref.size() != 1 || !(ref.contains("generator") || ref.contains("class")))
    throw SchemaError(where + R"(: expected a cochain name, {"generator": k} or {"class": [...]})");
  const Cohomology h0(ft.b(), 0);
  const GroupPtr& g = h0.group();
  if (ref.contains("generator")) {
    const long k = long_from_json(ref["generator"], where + ".generator");
    if (k < 0 || static_cast<std::size_t>(k) >= g->dimension())
      throw SchemaError(where + ".generator: H^0(B) = " + g->to_string() + " has " + std::to_string(g->dimension()) +
                        " generators");
    return std::make_shared<const Cochain>(h0.representative(GroupElement::basis(g, k)));
  }
  IntVector v = vector_from_json(ref["class"], where + ".class");
  if (v.size() != g->dimension())
    throw SchemaError(where + ".class: H^0(B) = " + g->to_string() + " needs " + std::to_string(g->dimension()) +
                      " coordinates");
  return std::make_shared<const Cochain>(h0.representative(GroupElement(g, g->reduce(std::move(v)))));
}

Compute prepare(const std::string& op, const Json& t, TaskContext& ctx) {
  Definitions& defs = ctx.defs;
  const std::string& w = ctx.where;
  using CochainPtr = std::shared_ptr<const Cochain>;
  using ComplexPtr = std::shared_ptr<const FourTermComplex>;
  using FunctionPtr = std::shared_ptr<const RationalFunction>;

  if (op == "cohomology") {
    const SystemPtr s = defs.get<SystemPtr>(member(t, "system", w), w + ".system");
    const long p = long_from_json(member(t, "degree", w), w + ".degree");
    if (p < 0 || p > 2) throw SchemaError(w + ".degree: must be in 0..2");
    return [s, p] {
      const auto h = Cohomology(s, static_cast<int>(p)).group();
      Json out;
      out["group"] = group_text(*h);
      out["invariant_factors"] = to_json(IntVector(h->invariant_factors().begin(), h->invariant_factors().end()));
      out["free_rank"] = h->free_rank();
      return out;
    };
  }
  if (op == "class") {
    const CochainPtr c = defs.get<CochainPtr>(member(t, "cochain", w), w + ".cochain");
    return [c] {
      const Cohomology h(c->system(), c->degree());
      return class_fields(h.group(), h.class_of(*c));
    };
  }
  if (op == "cup" || op == "lift") {
    const CochainPtr a = defs.get<CochainPtr>(member(t, "left", w), w + ".left");
    const CochainPtr b = defs.get<CochainPtr>(member(t, "right", w), w + ".right");
    if (a->degree() != 1 || b->degree() != 1) throw SchemaError(w + ": cup and lift take 1-cocycles");
    if (op == "cup")
      return [a, b] {
        for (const auto* c : {a.get(), b.get()})
          if (!is_cocycle(*c)) throw NotACocycle("cup: input is not a cocycle");
        const TensorSystem ts = tensor_system(a->system(), b->system());
        const Cochain cocycle = cup(*a, *b, ts);
        const Cohomology h2(ts.system, 2);
        const GroupElement cls = h2.class_of(cocycle);
        Json out = class_fields(h2.group(), cls);
        out["cocycle"] = to_json(cocycle);
        if (auto witness = is_coboundary(cocycle)) out["witness"] = to_json(*witness);
        return out;
      };
    return [a, b] {
      const HeisenbergExtension ext(a->system(), b->system());
      const HeisenbergGerbe g = heisenberg_gerbe(ext, *a, *b);
      Json out = class_fields(g.h2, g.cls);
      out["equals_cup"] = g.equals_cup;
      out["passed"] = g.equals_cup;
      out["cocycle"] = to_json(g.cocycle);
      if (g.witness) out["witness"] = to_json(*g.witness);
      return out;
    };
  }
  if (op == "boundary0" || op == "boundary1") {
    const Json& ext_ref = member(t, "extension", w);
    std::shared_ptr<const CentralExtension> ext;
    std::shared_ptr<const HeisenbergExtension> heis;
    if (ext_ref.is_string() && [&] {
          try {
            heis = defs.get<std::shared_ptr<const HeisenbergExtension>>(ext_ref, w + ".extension");
            return true;
          } catch (const SchemaError&) {
            return false;
          }
        }()) {
      ext = heis;
    } else {
      ext = defs.get<std::shared_ptr<const AbelianExtension>>(ext_ref, w + ".extension");
    }
    CochainPtr g;
    if (t.contains("cochain")) {
      g = defs.get<CochainPtr>(t["cochain"], w + ".cochain");
    } else {
      if (!heis) throw SchemaError(w + ": left/right pairs need a heisenberg_extension");
      const CochainPtr a = defs.get<CochainPtr>(member(t, "left", w), w + ".left");
      const CochainPtr b = defs.get<CochainPtr>(member(t, "right", w), w + ".right");
      try {
        g = std::make_shared<const Cochain>(heis->pair(*a, *b));
      } catch (const Error& e) {
        throw SchemaError(w + ": " + e.what());
      }
    }
    const bool zero = op == "boundary0";
    return [ext, g, zero] {
      const Cochain a = zero ? boundary0(*ext, *g) : boundary1(*ext, *g);
      const Cohomology h(ext->kernel(), a.degree());
      Json out = class_fields(h.group(), h.class_of(a));
      out["cocycle"] = to_json(a);
      return out;
    };
  }
  if (op == "d2") {
    const ComplexPtr ft = defs.get<ComplexPtr>(member(t, "complex", w), w + ".complex");
    const CochainPtr beta = global_section(defs, *ft, member(t, "beta", w), w + ".beta");
    return [ft, beta] {
      const D2Result r = d2(*ft, *beta);
      const FactoredD2 f = d2_factored(*ft, splice(*ft), *beta);
      Json out = class_fields(r.h2, r.cls);
      out["factored_class"] = to_json(f.cls);
      out["agrees"] = f.cls == r.cls;
      out["passed"] = f.cls == r.cls;
      out["cocycle"] = to_json(r.cocycle);
      if (r.witness) out["witness"] = to_json(*r.witness);
      return out;
    };
  }
  if (op == "verify_d2") {
    const ComplexPtr ft = defs.get<ComplexPtr>(member(t, "complex", w), w + ".complex");
    const long samples = t.contains("samples") ? long_from_json(t["samples"], w + ".samples") : 6;
    if (samples < 1 || samples > 1000) throw SchemaError(w + ".samples: must be in 1..1000");
    const std::uint64_t seed = ctx.seed;
    const std::string name = member(t, "complex", w).get<std::string>();
    return [ft, samples, seed, name] {
      const D2Verification v = verify_d2(*ft, name, seed, static_cast<std::size_t>(samples));
      Json out = law_fields(v.laws);
      out["samples"] = v.samples;
      out["nonzero"] = v.nonzero;
      out["has_nonzero"] = v.nonzero > 0;
      return out;
    };
  }
  if (op == "fiber_groupoid") {
    const ComplexPtr ft = defs.get<ComplexPtr>(member(t, "complex", w), w + ".complex");
    const CochainPtr beta = global_section(defs, *ft, member(t, "beta", w), w + ".beta");
    const Face face = face_from_json(member(t, "face", w), w + ".face");
    if (!ft->nerve()->contains(face)) throw SchemaError(w + ".face: not a face of the nerve");
    return [ft, beta, face] {
      const FiberGroupoidReport r = fiber_groupoid_report(*ft, *beta, face);
      Json out;
      out["face"] = face;
      out["enumerated"] = r.enumerated;
      if (r.objects) out["objects"] = to_json(*r.objects);
      if (r.automorphisms) out["automorphisms"] = to_json(*r.automorphisms);
      if (r.components) out["components"] = to_json(*r.components);
      out["pairs_checked"] = r.pairs_checked;
      out["nonempty_pairs"] = r.nonempty_pairs;
      out["hom_sets_are_torsors"] = r.hom_sets_are_torsors;
      out["automorphism_group"] = r.automorphism_group;
      out["automorphisms_match_a"] = r.automorphisms_match_a;
      out["passed"] = r.hom_sets_are_torsors && r.automorphisms_match_a;
      return out;
    };
  }
  if (op == "heisenberg_axioms" || op == "extension_laws" || op == "aw_cup") {
    const GroupPtr a = defs.group(member(t, "a", w), w + ".a");
    const GroupPtr b = defs.group(member(t, "b", w), w + ".b");
    const std::uint64_t seed = ctx.seed;
    if (op == "heisenberg_axioms")
      return [a, b, seed] {
        AxiomOptions opt;
        opt.seed = seed;
        const AxiomReport r = verify_group_axioms(HeisenbergGroup(a, b), opt);
        Json out = law_fields(r.laws);
        out["order"] = r.order;
        out["exhaustive"] = r.exhaustive;
        return out;
      };
    if (op == "extension_laws")
      return [a, b] {
        for (const auto& g : {a, b})
          if (!g->is_finite()) throw InvalidInput("extension_laws needs finite groups");
        return law_fields(verify_extension_laws(HeisenbergGroup(a, b), Execution::parallel));
      };
    return [a, b, seed] {
      if (!a->is_finite() || !b->is_finite()) throw InvalidInput("aw_cup needs finite groups");
      Prop34Options opt;
      opt.seed = seed;
      return law_fields(verify_aw_cup(a, b, opt));
    };
  }
  if (op == "poonen_rains") {
    const GroupPtr a = defs.group(member(t, "a", w), w + ".a");
    return [a] {
      if (!a->is_finite()) throw InvalidInput("poonen_rains needs a finite group");
      return law_fields(verify_poonen_rains(PoonenRainsGroup(a), Execution::parallel));
    };
  }
  if (op == "dold_kan") {
    const GroupPtr m = defs.group(member(t, "group", w), w + ".group");
    const long i = long_from_json(member(t, "degree", w), w + ".degree");
    if (i != 1 && i != 2) throw SchemaError(w + ".degree: K(M, i) is built for i = 1, 2");
    return [m, i] { return law_fields(verify_dold_kan(m, static_cast<int>(i), 4)); };
  }
  if (op == "ord" || op == "tame_symbol") {
    const auto v = defs.get<std::shared_ptr<const Place>>(member(t, "place", w), w + ".place");
    if (op == "ord") {
      const FunctionPtr f = defs.get<FunctionPtr>(member(t, "function", w), w + ".function");
      return [v, f] { return Json{{"ord", ord(*v, *f)}}; };
    }
    const FunctionPtr f = defs.get<FunctionPtr>(member(t, "f", w), w + ".f");
    const FunctionPtr g = defs.get<FunctionPtr>(member(t, "g", w), w + ".g");
    return [v, f, g] {
      const ResidueValue r = tame_symbol(*v, *f, *g);
      return Json{{"field", r.field.to_string()}, {"value", to_json(r.value)}, {"norm", r.field.norm(r.value)}};
    };
  }
  if (op == "divisor") {
    const FunctionPtr f = defs.get<FunctionPtr>(member(t, "function", w), w + ".function");
    return [f] {
      const Divisor d = divisor(*f);
      return Json{{"divisor", to_json(d)}, {"text", d.to_string()}, {"degree", d.degree()}};
    };
  }
  if (op == "weil_reciprocity") {
    const FunctionPtr f = defs.get<FunctionPtr>(member(t, "f", w), w + ".f");
    const FunctionPtr g = defs.get<FunctionPtr>(member(t, "g", w), w + ".g");
    return [f, g] {
      const ReciprocityReport r = weil_reciprocity(*f, *g);
      Json local = Json::array();
      for (const auto& s : r.local)
        local.push_back(Json{{"place", to_json(s.place)}, {"symbol", to_json(s.value)}, {"norm", s.norm}});
      return Json{{"product", r.product}, {"holds", r.holds()}, {"passed", r.holds()}, {"local", local}};
    };
  }
  if (op == "steinberg") {
    const FunctionPtr f = defs.get<FunctionPtr>(member(t, "f", w), w + ".f");
    return [f] {
      const RationalFunction g = f->one_minus();
      if (f->is_zero() || g.is_zero()) throw InvalidInput("steinberg needs f outside {0, 1}");
      std::set<Place> places{Place::infinity(f->p())};
      for (const auto& h : {*f, g, *f * g}) {
        const Divisor d = divisor(h);
        for (const auto& [v, n] : d.terms()) places.insert(v);
      }
      Json local = Json::array();
      bool all_one = true;
      for (const auto& v : places) {
        const ResidueValue r = tame_symbol(v, *f, g);
        all_one = all_one && r.value.is_one();
        local.push_back(Json{{"place", to_json(v)}, {"symbol", to_json(r.value)}});
      }
      return Json{{"passed", all_one}, {"local", local}};
    };
  }
  if (op == "divisor_torsor") {
    const auto d = defs.get<std::shared_ptr<const Divisor>>(member(t, "divisor", w), w + ".divisor");
    if (d->empty()) throw SchemaError(w + ": the zero divisor carries no field; use a divisor with a term");
    return [d] {
      const long p = d->terms().begin()->first.p();
      const UnitSystem units(p);
      const DivisorTorsor r = divisor_torsor_cocycle(*d, units);
      Json out;
      out["f0"] = r.f0.to_string();
      out["f1"] = r.f1.to_string();
      out["g01"] = r.g01.to_string();
      out["cocycle"] = to_json(r.cocycle);
      out["class"] = to_json(r.cls);
      out["degree"] = r.degree;
      out["divisor_degree"] = d->degree();
      out["passed"] = r.degree == d->degree();
      return out;
    };
  }
  if (op == "acceptance") {
    const long id = long_from_json(member(t, "criterion", w), w + ".criterion");
    if (id < 1 || id > computed_criteria) throw SchemaError(w + ".criterion: must be in 1.." + std::to_string(computed_criteria));
    const std::uint64_t seed = defs.seed();
    return [id, seed] {
      AcceptanceOptions opt;
      opt.seed = seed;
      const CriterionResult r = run_criterion(static_cast<int>(id), opt);
      Json facts = Json::object();
      for (const auto& [k, v] : r.facts) facts[k] = v;
      Json out;
      out["criterion"] = r.id;
      out["title"] = r.title;
      out["passed"] = all_passed(r.laws);
      out["budget_seconds"] = r.budget_seconds;
      out["facts"] = facts;
      out["laws"] = to_json(r.laws);
      out["@seconds"] = r.seconds;  // moved out of the result unless timing is on
      return out;
    };
  }
  throw SchemaError(w + ": unknown op \"" + op + "\"");
}

bool same_value(const Json& expected, const Json& actual) {
  if (expected == actual) return true;
  if (expected.is_string() && actual.is_string()) {
    try {
      return FgAbGroup::parse(expected.get<std::string>()) == FgAbGroup::parse(actual.get<std::string>());
    } catch (const std::exception&) {
      return false;
    }
  }
  return false;
}

struct PreparedTask {
  std::string name;
  std::string op;
  const Json* expect = nullptr;
  Compute compute;
};

Json run_task(const PreparedTask& task, bool timing, bool& breach) {
  Json entry;
  entry["name"] = task.name;
  entry["op"] = task.op;
  const auto start = std::chrono::steady_clock::now();
  try {
    Json result = task.compute();
    double inner_seconds = -1;
    if (result.contains("@seconds")) {
      inner_seconds = result["@seconds"].get<double>();
      result.erase("@seconds");
    }
    std::string status = "computed";
    Json mismatches = Json::array();
    if (task.expect) {
      for (const auto& [k, v] : task.expect->items()) {
        if (!result.contains(k)) {
          mismatches.push_back(Json{{"key", k}, {"expected", v}, {"actual", nullptr}});
        } else if (!same_value(v, result[k])) {
          mismatches.push_back(Json{{"key", k}, {"expected", v}, {"actual", result[k]}});
        }
      }
      status = mismatches.empty() ? "pass" : "fail";
    }
    if (result.contains("passed")) {
      if (!result["passed"].get<bool>()) status = "fail";
      else if (status == "computed") status = "pass";
    }
    entry["status"] = status;
    entry["result"] = std::move(result);
    if (!mismatches.empty()) entry["mismatches"] = std::move(mismatches);
    if (timing && inner_seconds >= 0) entry["criterion_seconds"] = inner_seconds;
  } catch (const InvariantBreach& e) {
    breach = true;
    entry["status"] = "error";
    entry["error"] = std::string("invariant breach: ") + e.what();
  } catch (const std::exception& e) {
    entry["status"] = "error";
    entry["error"] = e.what();
  }
  if (timing) entry["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return entry;
}

}  // namespace

RunOutcome run_job(const Json& job, const RunOptions& options) {
  allow_only(job, {"version", "name", "description", "seed", "definitions", "tasks"}, "job");
  const Json& version = member(job, "version", "job");
  if (!version.is_number_integer() || version.get<int>() != job_version)
    throw SchemaError("job: unsupported version (this tool reads version " + std::to_string(job_version) + ")");
  static const Json empty = Json::array();
  Definitions defs(job.contains("definitions") ? job["definitions"] : empty, options.seed);

  const Json& tasks = job.contains("tasks") ? job["tasks"] : empty;
  if (!tasks.is_array()) throw SchemaError("tasks: expected a list");
  std::vector<PreparedTask> prepared;
  std::set<std::string> names;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string where = "tasks[" + std::to_string(i) + "]";
    const Json& t = tasks[i];
    const Json& op_json = member(t, "op", where);
    if (!op_json.is_string()) throw SchemaError(where + ".op: expected a string");
    const std::string op = op_json.get<std::string>();
    const auto keys = task_keys().find(op);
    if (keys == task_keys().end()) throw SchemaError(where + ": unknown op \"" + op + "\"");
    for (const auto& [k, v] : t.items()) {
      if (k == "op" || k == "name" || k == "expect") continue;
      if (std::none_of(keys->second.begin(), keys->second.end(), [&](const char* a) { return k == a; }))
        throw SchemaError(where + ": unknown key \"" + k + "\" for op " + op);
    }
    std::string name = op + "#" + std::to_string(i);
    if (t.contains("name")) {
      if (!t["name"].is_string()) throw SchemaError(where + ".name: expected a string");
      name = t["name"].get<std::string>();
    }
    if (!names.insert(name).second) throw SchemaError(where + ": duplicate task name \"" + name + "\"");
    const Json* expect = nullptr;
    if (t.contains("expect")) {
      if (!t["expect"].is_object()) throw SchemaError(where + ".expect: expected an object");
      expect = &t["expect"];
    }
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    TaskContext ctx{defs, (std::uint64_t(words[0]) << 32) | words[1], where};
    Compute compute;
    try {
      compute = prepare(op, t, ctx);
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      throw SchemaError(where + ": " + e.what());
    }
    prepared.push_back({name, op, expect, std::move(compute)});
  }

  std::vector<Json> entries(prepared.size());
  std::vector<char> breaches(prepared.size(), 0);
  const auto n = static_cast<std::int64_t>(prepared.size());
  const int threads = std::max(1, options.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (std::int64_t i = 0; i < n; ++i) {
    bool breach = false;
    entries[i] = run_task(prepared[i], options.timing, breach);
    breaches[i] = breach;
  }

  RunOutcome out;
  Json report;
  report["tool"] = "gerbeforge";
  report["version"] = tool_version;
  if (job.contains("name")) report["job"] = job["name"];
  report["seed"] = options.seed;
  Json summary{{"tasks", prepared.size()}, {"pass", 0}, {"fail", 0}, {"computed", 0}, {"error", 0}};
  Json list = Json::array();
  for (auto& e : entries) {
    const std::string status = e["status"].get<std::string>();
    summary[status] = summary[status].get<int>() + 1;
    list.push_back(std::move(e));
  }
  const bool breach = std::any_of(breaches.begin(), breaches.end(), [](char b) { return b != 0; });
  if (breach) out.exit_code = ExitCode::invariant;
  else if (summary["fail"].get<int>() > 0 || summary["error"].get<int>() > 0) out.exit_code = ExitCode::failure;
  report["summary"] = summary;
  report["tasks"] = std::move(list);
  report["exit_code"] = static_cast<int>(out.exit_code);
  out.report = std::move(report);
  return out;
}

FourTermComplex load_fourterm(const Json& job, const std::string& name) {
  static const Json empty = Json::array();
  Definitions defs(job.contains("definitions") ? job["definitions"] : empty, default_seed);
  return *defs.get<std::shared_ptr<const FourTermComplex>>(Json(name), "load_fourterm");
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

std::string render_text(const Json& report) {
  std::ostringstream out;
  out << "gerbeforge " << report.value("version", "") << "  seed " << report.value("seed", std::uint64_t{0}) << "\n";
  if (report.contains("error")) {
    out << "error: " << report["error"].get<std::string>() << "\n";
    return out.str();
  }
  for (const auto& t : report["tasks"]) {
    std::string status = t["status"].get<std::string>();
    for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << status << "  " << t["name"].get<std::string>() << " (" << t["op"].get<std::string>() << ")";
    if (t.contains("result")) {
      const Json& r = t["result"];
      if (r.contains("title")) out << "  " << r["title"].get<std::string>();
      if (r.contains("group")) out << "  group " << r["group"].get<std::string>();
      if (r.contains("class")) out << "  class " << r["class"].dump();
      if (r.contains("degree") && r["degree"].is_number()) out << "  degree " << r["degree"].dump();
      if (r.contains("product")) out << "  product " << r["product"].dump();
      if (r.contains("ord")) out << "  ord " << r["ord"].dump();
      if (r.contains("value")) out << "  value " << r["value"].dump();
      if (r.contains("text")) out << "  " << r["text"].get<std::string>();
      if (r.contains("laws")) {
        std::uint64_t cases = 0, failures = 0;
        for (const auto& l : r["laws"]) {
          cases += l["cases"].get<std::uint64_t>();
          failures += l["failures"].get<std::uint64_t>();
        }
        out << "  " << r["laws"].size() << " laws, " << cases << " cases, " << failures << " failures";
      }
    }
    if (t.contains("seconds")) out << "  " << t["seconds"].get<double>() << " s";
    out << "\n";
    if (t.contains("error")) out << "    " << t["error"].get<std::string>() << "\n";
    if (t.contains("mismatches"))
      for (const auto& m : t["mismatches"])
        out << "    " << m["key"].get<std::string>() << ": expected " << m["expected"].dump() << ", got "
            << m["actual"].dump() << "\n";
    if (t.contains("result") && t["result"].contains("laws"))
      for (const auto& l : t["result"]["laws"])
        if (l["failures"].get<std::uint64_t>() > 0)
          out << "    " << l["law"].get<std::string>() << ": " << l.value("first_failure", "") << "\n";
  }
  const Json& s = report["summary"];
  out << s["tasks"] << " tasks: " << s["pass"] << " pass, " << s["fail"] << " fail, " << s["computed"]
      << " computed, " << s["error"] << " error; exit " << report["exit_code"] << "\n";
  return out.str();
}

Json schema_error_report(const std::string& message, std::uint64_t seed) {
  Json report;
  report["tool"] = "gerbeforge";
  report["version"] = tool_version;
  report["seed"] = seed;
  report["error"] = message;
  report["exit_code"] = static_cast<int>(ExitCode::schema);
  return report;
}

}  // namespace gf::cli
