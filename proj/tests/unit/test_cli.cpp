#include <filesystem>

#include "doctest.h"
#include "gerbeforge/cli/commands.hpp"
#include "gerbeforge/cli/job.hpp"

using namespace gf;
using namespace gf::cli;

namespace {

Json parse(const char* text) { return Json::parse(text); }

RunOutcome run(const Json& job, int jobs = 1) {
  RunOptions opt;
  opt.jobs = jobs;
  return run_job(job, opt);
}

const char* torus_definitions = R"([
  {"name": "torus", "kind": "nerve", "preset": "torus"},
  {"name": "Z2", "kind": "system", "nerve": "torus", "constant": "Z/2"},
  {"name": "a", "kind": "cochain", "system": "Z2", "degree": 1, "class": [1, 0]},
  {"name": "b", "kind": "cochain", "system": "Z2", "degree": 1, "class": [0, 1]}
])";

Json torus_job(Json tasks) {
  return Json{{"version", 1}, {"definitions", Json::parse(torus_definitions)}, {"tasks", std::move(tasks)}};
}

std::string status_of(const RunOutcome& r, std::size_t i) { return r.report["tasks"][i]["status"].get<std::string>(); }

}  // namespace

TEST_CASE("empty job") {
  const RunOutcome r = run(parse(R"({"version": 1, "tasks": []})"));
  CHECK(r.exit_code == ExitCode::ok);
  CHECK(r.report["tasks"].empty());
  CHECK(r.report["summary"]["tasks"] == 0);
  CHECK(r.report["exit_code"] == 0);
}

TEST_CASE("expectations decide pass and fail") {
  const RunOutcome good = run(torus_job(Json::parse(R"([
    {"op": "cup", "left": "a", "right": "b", "expect": {"class_order": 2, "group": "Z/2"}},
    {"op": "cup", "left": "a", "right": "a", "expect": {"trivial": true}}
  ])")));
  CHECK(good.exit_code == ExitCode::ok);
  CHECK(status_of(good, 0) == "pass");
  CHECK(status_of(good, 1) == "pass");

  const RunOutcome bad = run(torus_job(Json::parse(R"([
    {"op": "cup", "left": "a", "right": "b", "expect": {"class": [0]}},
    {"op": "cup", "left": "a", "right": "b", "expect": {"no_such_key": 1}},
    {"op": "cup", "left": "a", "right": "b"}
  ])")));
  CHECK(bad.exit_code == ExitCode::failure);
  CHECK(status_of(bad, 0) == "fail");
  CHECK(bad.report["tasks"][0]["mismatches"][0]["actual"] == Json::array({1}));
  CHECK(status_of(bad, 1) == "fail");
  CHECK(status_of(bad, 2) == "computed");
  CHECK(bad.report["summary"]["fail"] == 2);
}

TEST_CASE("group expectations compare normal forms") {
  const RunOutcome r = run(torus_job(Json::parse(R"([
    {"op": "cohomology", "system": "Z2", "degree": 1, "expect": {"group": "Z/2+Z/2"}},
    {"op": "cohomology", "system": "Z2", "degree": 2, "expect": {"group": "Z/2 + Z/2"}}
  ])")));
  CHECK(status_of(r, 0) == "pass");
  CHECK(status_of(r, 1) == "fail");
}

TEST_CASE("schema violations throw before anything runs") {
  const char* bad_jobs[] = {
      R"({"tasks": []})",
      R"({"version": 2, "tasks": []})",
      R"({"version": 1, "extra": 0})",
      R"({"version": 1, "tasks": [{"op": "nope"}]})",
      R"({"version": 1, "tasks": [{"op": "cohomology", "system": "S", "degree": 1}]})",
      R"({"version": 1, "tasks": [{"op": "ord", "place": "v", "function": "f", "colour": 1}]})",
      R"({"version": 1, "definitions": [{"name": "x", "kind": "group", "value": "Z/2"},
                                        {"name": "x", "kind": "group", "value": "Z"}]})",
      R"({"version": 1, "definitions": [{"name": "x", "kind": "cochain", "system": "x", "degree": 1}]})",
      R"({"version": 1, "definitions": [{"name": "n", "kind": "nerve", "preset": "klein"}]})",
      R"({"version": 1, "definitions": [{"name": "g", "kind": "group", "value": "Z/"}]})",
      R"({"version": 1, "definitions": [{"name": "f", "kind": "function", "p": 4, "numerator": [1]}]})",
      R"({"version": 1, "definitions": [{"name": "v", "kind": "place", "p": 3, "value": [1, 0, 1, 1]}]})",
      R"({"version": 1, "definitions": [
          {"name": "n", "kind": "nerve", "preset": "circle"},
          {"name": "A", "kind": "system", "nerve": "n", "constant": "Z/2"},
          {"name": "c", "kind": "cochain", "system": "A", "degree": 1, "values": [[1], [0]]}]})",
      R"({"version": 1, "definitions": [
          {"name": "n", "kind": "nerve", "preset": "circle"},
          {"name": "A", "kind": "system", "nerve": "n", "constant": "Z/2"},
          {"name": "B", "kind": "system", "nerve": "n", "constant": "Z/3"},
          {"name": "h", "kind": "hom", "source": "A", "target": "B", "matrix": [[1]]}]})",
  };
  for (const char* text : bad_jobs) {
    CAPTURE(text);
    CHECK_THROWS_AS(run(Json::parse(text)), SchemaError);
  }
}

TEST_CASE("task errors are recorded, not thrown") {
  const RunOutcome r = run(parse(R"({"version": 1, "tasks": [{"op": "poonen_rains", "a": "Z"}]})"));
  CHECK(r.exit_code == ExitCode::failure);
  CHECK(status_of(r, 0) == "error");
  CHECK(r.report["tasks"][0].contains("error"));
}

TEST_CASE("integers cross 2^53 as strings") {
  const Integer small("9007199254740991"), big("9007199254740992");
  CHECK(to_json(small).is_number_integer());
  CHECK(to_json(-small).is_number_integer());
  CHECK(to_json(big) == "9007199254740992");
  CHECK(to_json(-big) == "-9007199254740992");
  CHECK(integer_from_json(to_json(big), "x") == big);
  CHECK(integer_from_json(Json("123456789012345678901234567890"), "x") == Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(integer_from_json(Json("12a"), "x"), SchemaError);
  CHECK_THROWS_AS(integer_from_json(Json(1.5), "x"), SchemaError);

  // A Z-valued class with a coordinate beyond 2^53 survives the report.
  const RunOutcome r = run(parse(R"({"version": 1, "definitions": [
      {"name": "n", "kind": "nerve", "preset": "circle"},
      {"name": "Z", "kind": "system", "nerve": "n", "constant": "Z"},
      {"name": "c", "kind": "cochain", "system": "Z", "degree": 1, "class": ["90071992547409920"]}],
    "tasks": [{"op": "class", "cochain": "c", "expect": {"class": ["90071992547409920"], "class_order": null}}]})"));
  CHECK(status_of(r, 0) == "pass");
}

TEST_CASE("explicit systems and homs") {
  // Z on the circle, twisted by -1 across one edge: H^0 = 0, H^1 = Z/2.
  const RunOutcome r = run(parse(R"({"version": 1, "definitions": [
      {"name": "n", "kind": "nerve", "indices": 3, "maximal_faces": [[0, 1], [0, 2], [1, 2]]},
      {"name": "M", "kind": "system", "nerve": "n",
       "faces": [{"face": [0], "group": "Z"}, {"face": [1], "group": "Z"}, {"face": [2], "group": "Z"},
                 {"face": [0, 1], "group": "Z"}, {"face": [0, 2], "group": "Z"}, {"face": [1, 2], "group": "Z"}],
       "restrictions": [
         {"from": [0], "to": [0, 1], "matrix": [[1]]}, {"from": [1], "to": [0, 1], "matrix": [[1]]},
         {"from": [0], "to": [0, 2], "matrix": [[1]]}, {"from": [2], "to": [0, 2], "matrix": [[1]]},
         {"from": [1], "to": [1, 2], "matrix": [[1]]}, {"from": [2], "to": [1, 2], "matrix": [[-1]]}]},
      {"name": "M2", "kind": "system", "twisted": "Z"}],
    "tasks": [
      {"op": "cohomology", "system": "M", "degree": 0, "expect": {"group": "0"}},
      {"op": "cohomology", "system": "M", "degree": 1, "expect": {"group": "Z/2"}},
      {"op": "cohomology", "system": "M2", "degree": 1, "expect": {"group": "Z/2"}}]})"));
  CHECK(r.exit_code == ExitCode::ok);
}

TEST_CASE("parallel execution keeps job order and bytes") {
  const Json job = load_json(GERBEFORGE_SOURCE_DIR "/jobs/tour.json");
  RunOptions serial, parallel;
  serial.seed = parallel.seed = 99;
  parallel.jobs = 4;
  const std::string a = render_json(run_job(job, serial).report);
  const std::string b = render_json(run_job(job, parallel).report);
  CHECK(a == b);
  CHECK(a == render_json(run_job(job, serial).report));
  const Json report = Json::parse(a);
  REQUIRE(report["tasks"].size() == job["tasks"].size());
  for (std::size_t i = 0; i < job["tasks"].size(); ++i)
    CHECK(report["tasks"][i]["name"] == job["tasks"][i]["name"]);
  CHECK(report["exit_code"] == 0);
}

TEST_CASE("seed changes random definitions only") {
  const Json job = parse(R"({"version": 1, "definitions": [
      {"name": "n", "kind": "nerve", "preset": "torus"},
      {"name": "A", "kind": "system", "nerve": "n", "constant": "Z/5 + Z/5"},
      {"name": "r", "kind": "cochain", "system": "A", "degree": 1, "random": true}],
    "tasks": [{"op": "class", "cochain": "r"}]})");
  RunOptions one, two;
  one.seed = 1;
  two.seed = 2;
  const Json a = run_job(job, one).report, b = run_job(job, two).report;
  CHECK(a["seed"] == 1);
  CHECK(a["tasks"][0]["result"]["cocycle"] != b["tasks"][0]["result"]["cocycle"]);
  CHECK(run_job(job, one).report == a);
}

TEST_CASE("subcommand jobs") {
  SUBCASE("tame over F_3 with f = t, g = 1 - t") {
    const RunOutcome r = run(tame_job(3, Json::array({0, 1}), Json::array({1}), Json::array({1, 2}),
                                      Json::array({1}), nullptr));
    CHECK(r.exit_code == ExitCode::ok);
    const Json& weil = r.report["tasks"][2]["result"];
    CHECK(weil["product"] == 1);
    CHECK(weil["local"].size() == 3);
  }
  SUBCASE("tame symbol at a place") {
    const Json v = Json::array({1, 1});
    const RunOutcome r = run(tame_job(3, Json::array({0, 1}), Json::array({1}), Json::array({1, 2}),
                                      Json::array({1}), &v));
    // At t = -1: f = -1 is a unit, g = 1 - t = 2 is a unit, so the symbol is 1.
    CHECK(r.report["tasks"][0]["result"]["value"] == Json::array({1}));
  }
  SUBCASE("cohomology of the torus") {
    const RunOutcome r = run(cohomology_job("torus", "Z", {0, 1, 2}));
    CHECK(r.report["tasks"][0]["result"]["group"] == "Z");
    CHECK(r.report["tasks"][1]["result"]["group"] == "Z^2");
    CHECK(r.report["tasks"][2]["result"]["group"] == "Z");
  }
  SUBCASE("cup and lift default to the first generator") {
    const RunOutcome cup = run(pairing_job("cup", "torus", "Z/2", "Z/2", {}, {0, 1}));
    CHECK(cup.report["tasks"][0]["result"]["class_order"] == 2);
    const RunOutcome lift = run(pairing_job("lift", "torus", "Z/3", "Z/3", {1, 0}, {0, 1}));
    CHECK(lift.exit_code == ExitCode::ok);
    CHECK(lift.report["tasks"][0]["result"]["class_order"] == 3);
  }
  SUBCASE("dk-verify") {
    const RunOutcome r = run(dold_kan_job({"Z/2", "Z/3"}));
    CHECK(r.report["summary"]["tasks"] == 8);  // 2 x 2 Dold-Kan, 4 ordered pairs
    CHECK(r.exit_code == ExitCode::ok);
  }
  SUBCASE("fourterm with an unknown name is a schema error") {
    CHECK_THROWS_AS(run(fourterm_job({"no-such-complex"}, 2)), SchemaError);
  }
  SUBCASE("selftest lists the computed criteria") {
    CHECK(selftest_job()["tasks"].size() == 8);
  }
}

TEST_CASE("packaged four-term data files") {
  const std::filesystem::path dir = GERBEFORGE_SOURCE_DIR "/data/fourterm";
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) files += entry.path().extension() == ".json";
  CHECK(files == library_names().size());
  for (const auto& lib : library()) {
    CAPTURE(lib.name);
    const Json file = load_json((dir / (lib.name + ".json")).string());
    CHECK(file == fourterm_job_file(lib));
    const FourTermComplex ft = load_fourterm(file, "complex");
    CHECK(*ft.a() == *lib.complex.a());
    CHECK(*ft.l1() == *lib.complex.l1());
    CHECK(*ft.l0() == *lib.complex.l0());
    CHECK(*ft.b() == *lib.complex.b());
    for (std::size_t id = 0; id < ft.nerve()->face_count(); ++id) {
      CHECK(ft.iota().at(id).matrix() == lib.complex.iota().at(id).matrix());
      CHECK(ft.del().at(id).matrix() == lib.complex.del().at(id).matrix());
      CHECK(ft.p().at(id).matrix() == lib.complex.p().at(id).matrix());
    }
  }
}

TEST_CASE("text rendering") {
  const RunOutcome r = run(torus_job(Json::parse(R"([
    {"name": "wrong", "op": "cup", "left": "a", "right": "b", "expect": {"class": [0]}}
  ])")));
  const std::string text = render_text(r.report);
  CHECK(text.find("FAIL  wrong (cup)") != std::string::npos);
  CHECK(text.find("class: expected [0], got [1]") != std::string::npos);
  const std::string err = render_text(schema_error_report("broken", 5));
  CHECK(err.find("error: broken") != std::string::npos);
}
