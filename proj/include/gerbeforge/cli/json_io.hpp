#pragma once

#include <string>

#include "gerbeforge/cech/cochain.hpp"
#include "gerbeforge/sweep.hpp"
#include "gerbeforge/symbols/rational.hpp"
#include "json.hpp"

namespace gf::cli {

using Json = nlohmann::ordered_json;

// A malformed job: bad shape, unknown key, unresolved name. Exit code 2.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers travel as JSON numbers inside +-2^53 and as decimal strings
// beyond it; both spellings are accepted on input.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j, const std::string& where);
long long_from_json(const Json& j, const std::string& where);

Json to_json(const IntVector& v);
IntVector vector_from_json(const Json& j, const std::string& where);
IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);
Face face_from_json(const Json& j, const std::string& where);

// Groups are written in the normal form "Z/2 + Z/4 + Z^2" ("0" when trivial)
// and read from that text or from {"invariant_factors": [...], "free_rank": n}.
std::string group_text(const FgAbGroup& g);
FgAbGroup group_from_json(const Json& j, const std::string& where);

Json to_json(const GroupElement& x);
// [{"face": [i, j], "value": [...]}, ...] in face order.
Json to_json(const Cochain& c);
// Either a list of coordinate lists in face order or the object form above.
Cochain cochain_from_json(const SystemPtr& s, int degree, const Json& values, const std::string& where);

Json to_json(const Poly& f);
Poly poly_from_json(long p, const Json& j, const std::string& where);
Json to_json(const Place& v);
Place place_from_json(long p, const Json& j, const std::string& where);
Json to_json(const Divisor& d);
Json to_json(const RationalFunction& f);

Json to_json(const LawCheck& c);
Json to_json(const std::vector<LawCheck>& cs);

// Object members with checked types.
const Json& member(const Json& obj, const char* key, const std::string& where);
void allow_only(const Json& obj, std::initializer_list<const char*> keys, const std::string& where);

}  // namespace gf::cli
