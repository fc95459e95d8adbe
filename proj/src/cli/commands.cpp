#include "gerbeforge/cli/commands.hpp"

#include <algorithm>

#include "gerbeforge/acceptance.hpp"
#include "gerbeforge/fourterm/library.hpp"

namespace gf::cli {
namespace {

Json job(std::string name) {
  return Json{{"version", 1}, {"name", std::move(name)}, {"definitions", Json::array()}, {"tasks", Json::array()}};
}

Json nerve_definition(const std::string& preset) {
  return Json{{"name", "nerve"}, {"kind", "nerve"}, {"preset", preset}};
}

Json class_cochain(const std::string& name, const std::string& system, const std::vector<long>& cls) {
  Json d{{"name", name}, {"kind", "cochain"}, {"system", system}, {"degree", 1}};
  if (cls.empty()) d["generator"] = 0;
  else d["class"] = cls;
  return d;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(cli::to_json(x));
    out.push_back(std::move(row));
  }
  return out;
}

Json nerve_json(const CoverNerve& n, const std::string& name) {
  Json maximal = Json::array();
  for (std::size_t id = 0; id < n.face_count(); ++id) {
    const Face& f = n.face(id);
    bool is_maximal = true;
    for (int v = 0; v < n.index_count() && is_maximal; ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      Face g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), v), v);
      is_maximal = !n.contains(g);
    }
    if (is_maximal && f.size() > 1) maximal.push_back(f);
  }
  return Json{{"name", name}, {"kind", "nerve"}, {"indices", n.index_count()}, {"maximal_faces", maximal}};
}

Json system_json(const CoefficientSystem& s, const std::string& name, const std::string& nerve) {
  const CoverNerve& n = *s.nerve();
  Json faces = Json::array(), restrictions = Json::array();
  for (std::size_t id = 0; id < n.face_count(); ++id) {
    const Face& f = n.face(id);
    faces.push_back(Json{{"face", f}, {"group", group_text(*s.group_at(id))}});
    if (f.size() < 2) continue;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const IntMatrix& m = s.immediate(id, k).matrix();
      if (m.empty()) continue;
      restrictions.push_back(Json{{"from", omit(f, k)}, {"to", f}, {"matrix", matrix_json(m)}});
    }
  }
  return Json{{"name", name}, {"kind", "system"}, {"nerve", nerve}, {"faces", faces}, {"restrictions", restrictions}};
}

Json hom_json(const SystemHom& h, const std::string& name, const std::string& source, const std::string& target) {
  const CoverNerve& n = *h.source()->nerve();
  Json faces = Json::array();
  for (std::size_t id = 0; id < n.face_count(); ++id) {
    const IntMatrix& m = h.at(id).matrix();
    if (!m.empty()) faces.push_back(Json{{"face", n.face(id)}, {"matrix", matrix_json(m)}});
  }
  return Json{{"name", name}, {"kind", "hom"}, {"source", source}, {"target", target}, {"faces", faces}};
}

}  // namespace

Json fourterm_job_file(const LibraryComplex& entry) {
  const FourTermComplex& ft = entry.complex;
  Json j{{"version", 1}, {"name", entry.name}, {"description", entry.description}};
  Json defs = Json::array();
  defs.push_back(nerve_json(*ft.nerve(), "nerve"));
  defs.push_back(system_json(*ft.a(), "A", "nerve"));
  defs.push_back(system_json(*ft.l1(), "L1", "nerve"));
  defs.push_back(system_json(*ft.l0(), "L0", "nerve"));
  defs.push_back(system_json(*ft.b(), "B", "nerve"));
  defs.push_back(hom_json(ft.iota(), "iota", "A", "L1"));
  defs.push_back(hom_json(ft.del(), "del", "L1", "L0"));
  defs.push_back(hom_json(ft.p(), "p", "L0", "B"));
  defs.push_back(Json{{"name", "complex"}, {"kind", "fourterm"}, {"iota", "iota"}, {"del", "del"}, {"p", "p"}});
  j["definitions"] = std::move(defs);
  j["tasks"] = Json::array({Json{{"name", "d2"},
                                 {"op", "verify_d2"},
                                 {"complex", "complex"},
                                 {"expect", Json{{"passed", true}, {"has_nonzero", entry.has_nonzero_d2}}}}});
  return j;
}

Json cohomology_job(const std::string& nerve, const std::string& group, const std::vector<int>& degrees) {
  Json j = job("cohomology");
  j["definitions"].push_back(nerve_definition(nerve));
  j["definitions"].push_back(Json{{"name", "F"}, {"kind", "system"}, {"nerve", "nerve"}, {"constant", group}});
  for (int p : degrees)
    j["tasks"].push_back(Json{{"name", "H^" + std::to_string(p)}, {"op", "cohomology"}, {"system", "F"}, {"degree", p}});
  return j;
}

Json pairing_job(const std::string& op, const std::string& nerve, const std::string& a, const std::string& b,
                 const std::vector<long>& left_class, const std::vector<long>& right_class) {
  Json j = job(op);
  auto& defs = j["definitions"];
  defs.push_back(nerve_definition(nerve));
  defs.push_back(Json{{"name", "A"}, {"kind", "system"}, {"nerve", "nerve"}, {"constant", a}});
  defs.push_back(Json{{"name", "B"}, {"kind", "system"}, {"nerve", "nerve"}, {"constant", b}});
  defs.push_back(class_cochain("p", "A", left_class));
  defs.push_back(class_cochain("q", "B", right_class));
  j["tasks"].push_back(Json{{"name", op}, {"op", op}, {"left", "p"}, {"right", "q"}});
  return j;
}

Json fourterm_job(const std::vector<std::string>& names, long samples) {
  Json j = job("fourterm");
  for (const auto& name : names.empty() ? library_names() : names) {
    j["definitions"].push_back(Json{{"name", name}, {"kind", "fourterm"}, {"library", name}});
    Json task{{"name", name}, {"op", "verify_d2"}, {"complex", name}, {"samples", samples}};
    // Unknown names are left to the job validator to report.
    try {
      task["expect"] = Json{{"has_nonzero", library_complex(name).has_nonzero_d2}};
    } catch (const std::exception&) {
    }
    j["tasks"].push_back(std::move(task));
  }
  return j;
}

Json dold_kan_job(const std::vector<std::string>& groups) {
  Json j = job("dk-verify");
  for (const auto& m : groups)
    for (int i : {1, 2})
      j["tasks"].push_back(Json{{"name", "K(" + m + ", " + std::to_string(i) + ")"},
                                {"op", "dold_kan"}, {"group", m}, {"degree", i}});
  for (const auto& a : groups)
    for (const auto& b : groups)
      j["tasks"].push_back(Json{{"name", "AW cup " + a + " x " + b}, {"op", "aw_cup"}, {"a", a}, {"b", b}});
  return j;
}

Json tame_job(long p, const Json& f_num, const Json& f_den, const Json& g_num, const Json& g_den,
              const Json* place) {
  Json j = job("tame");
  auto& defs = j["definitions"];
  defs.push_back(Json{{"name", "f"}, {"kind", "function"}, {"p", p}, {"numerator", f_num}, {"denominator", f_den}});
  defs.push_back(Json{{"name", "g"}, {"kind", "function"}, {"p", p}, {"numerator", g_num}, {"denominator", g_den}});
  if (place) {
    defs.push_back(Json{{"name", "v"}, {"kind", "place"}, {"p", p}, {"value", *place}});
    j["tasks"].push_back(Json{{"name", "tame symbol"}, {"op", "tame_symbol"}, {"place", "v"}, {"f", "f"}, {"g", "g"}});
  } else {
    j["tasks"].push_back(Json{{"name", "div f"}, {"op", "divisor"}, {"function", "f"}});
    j["tasks"].push_back(Json{{"name", "div g"}, {"op", "divisor"}, {"function", "g"}});
    j["tasks"].push_back(Json{{"name", "weil reciprocity"}, {"op", "weil_reciprocity"}, {"f", "f"}, {"g", "g"}});
  }
  return j;
}

Json selftest_job() {
  Json j = job("selftest");
  for (int id = 1; id <= computed_criteria; ++id)
    j["tasks"].push_back(Json{{"name", "criterion " + std::to_string(id)}, {"op", "acceptance"}, {"criterion", id}});
  return j;
}

}  // namespace gf::cli
