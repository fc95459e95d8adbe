#include "gerbeforge/cli/json_io.hpp"

#include <algorithm>

#include "gerbeforge/error.hpp"

namespace gf::cli {
namespace {

const Integer& exact_limit() {
  static const Integer limit("9007199254740992");  // 2^53
  return limit;
}

}  // namespace

Json to_json(const Integer& x) {
  if (abs(x) < exact_limit()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw SchemaError(where + ": expected an integer or a decimal string");
}

long long_from_json(const Json& j, const std::string& where) {
  const Integer x = integer_from_json(j, where);
  if (!x.fits_slong_p()) throw SchemaError(where + ": integer out of range");
  return x.get_si();
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

IntVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected a list of integers");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw SchemaError(where + ": expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " matrix");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const IntVector row = vector_from_json(j[r], where + "[" + std::to_string(r) + "]");
    if (row.size() != cols)
      throw SchemaError(where + ": row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Face face_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected a nonempty list of cover indices");
  Face f;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw SchemaError(where + ": cover indices are integers");
    f.push_back(x.get<int>());
  }
  if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end())
    throw SchemaError(where + ": face indices must be strictly increasing");
  return f;
}

std::string group_text(const FgAbGroup& g) { return g.to_string(); }

FgAbGroup group_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return FgAbGroup::parse(j.get<std::string>());
    if (j.is_object()) {
      allow_only(j, {"invariant_factors", "free_rank"}, where);
      std::vector<Integer> factors;
      if (j.contains("invariant_factors"))
        for (const auto& x : vector_from_json(j["invariant_factors"], where + ".invariant_factors"))
          factors.push_back(x);
      const long rank = j.contains("free_rank") ? long_from_json(j["free_rank"], where + ".free_rank") : 0;
      if (rank < 0) throw SchemaError(where + ": negative free rank");
      return FgAbGroup(factors, static_cast<std::size_t>(rank));
    }
  } catch (const InvalidInput& e) {
    throw SchemaError(where + ": " + e.what());
  }
  throw SchemaError(where + ": a group is a string like \"Z/2 + Z\" or an invariant-factor object");
}

Json to_json(const GroupElement& x) { return to_json(x.coords()); }

Json to_json(const Cochain& c) {
  Json out = Json::array();
  const auto& nerve = *c.system()->nerve();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Json entry;
    entry["face"] = nerve.face(c.face_id(i));
    entry["value"] = to_json(c[i]);
    out.push_back(std::move(entry));
  }
  return out;
}

Cochain cochain_from_json(const SystemPtr& s, int degree, const Json& values, const std::string& where) {
  const auto& nerve = *s->nerve();
  if (degree < 0 || degree > CoverNerve::max_dimension)
    throw SchemaError(where + ": degree must be in 0..3");
  const auto& faces = nerve.faces_of_dimension(degree);
  if (!values.is_array() || values.size() != faces.size())
    throw SchemaError(where + ": expected " + std::to_string(faces.size()) + " face values");
  std::vector<GroupElement> parts(faces.size());
  std::vector<bool> seen(faces.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    std::size_t pos = i;
    const Json* coords = &values[i];
    if (values[i].is_object()) {
      allow_only(values[i], {"face", "value"}, at);
      const Face f = face_from_json(member(values[i], "face", at), at + ".face");
      const auto id = nerve.find(f);
      if (!id || f.size() != static_cast<std::size_t>(degree + 1))
        throw SchemaError(at + ": " + face_to_string(f) + " is not a face of degree " + std::to_string(degree));
      pos = nerve.position(*id);
      coords = &member(values[i], "value", at);
    }
    if (seen[pos]) throw SchemaError(at + ": face given twice");
    seen[pos] = true;
    const GroupPtr& g = s->group_at(faces[pos]);
    IntVector v = vector_from_json(*coords, at);
    if (v.size() != g->dimension())
      throw SchemaError(at + ": " + g->to_string() + " needs " + std::to_string(g->dimension()) + " coordinates");
    parts[pos] = GroupElement(g, g->reduce(std::move(v)));
  }
  return Cochain(s, degree, std::move(parts));
}

Json to_json(const Poly& f) {
  Json out = Json::array();
  for (long c : f.coefficients()) out.push_back(c);
  return out;
}

Poly poly_from_json(long p, const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": a polynomial is a coefficient list, constant term first");
  std::vector<long> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(long_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return Poly(p, std::move(c));
}

Json to_json(const Place& v) { return v.is_infinite() ? Json("inf") : to_json(v.prime()); }

Place place_from_json(long p, const Json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Place::infinity(p);
    throw SchemaError(where + ": a place is \"inf\" or a coefficient list");
  }
  try {
    return Place::finite(poly_from_json(p, j, where));
  } catch (const InvalidInput& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

Json to_json(const Divisor& d) {
  Json out = Json::array();
  for (const auto& [v, n] : d.terms()) out.push_back(Json{{"place", to_json(v)}, {"n", n}});
  return out;
}

Json to_json(const RationalFunction& f) {
  return Json{{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}};
}

Json to_json(const LawCheck& c) {
  Json out{{"law", c.law}, {"cases", c.cases}, {"failures", c.failures}};
  if (!c.first_failure.empty()) out["first_failure"] = c.first_failure;
  return out;
}

Json to_json(const std::vector<LawCheck>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(to_json(c));
  return out;
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError(where + ": missing \"" + key + "\"");
  return obj[key];
}

void allow_only(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  for (const auto& [k, v] : obj.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* allowed) { return k == allowed; }))
      throw SchemaError(where + ": unknown key \"" + k + "\"");
}

}  // namespace gf::cli
