#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gerbeforge/cli/commands.hpp"
#include "gerbeforge/cli/job.hpp"

namespace {

using gf::cli::Json;
using gf::cli::SchemaError;

std::uint64_t parse_seed(const std::string& text, const char* source) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, 10);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-')
    throw SchemaError(std::string(source) + ": not an unsigned 64-bit integer: " + text);
  return v;
}

// "[1, 0, 1]" or "1,0,1"; "inf" passes through for places.
Json list_argument(const std::string& text, const char* what) {
  if (text == "inf") return text;
  if (!text.empty() && text.front() == '[') {
    try {
      return Json::parse(text);
    } catch (const std::exception&) {
      throw SchemaError(std::string(what) + ": malformed list " + text);
    }
  }
  Json out = Json::array();
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw SchemaError(std::string(what) + ": not an integer list: " + text);
    }
  }
  return out;
}

struct Globals {
  std::optional<std::uint64_t> seed_flag;
  std::string seed_text;
  std::string report;
  std::string format = "json";
  int jobs = 1;
  bool timing = false;
};

int emit(const Json& report, const Globals& g) {
  const std::string text = g.format == "text" ? gf::cli::render_text(report) : gf::cli::render_json(report);
  if (g.report.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.report, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "gerbeforge: cannot write " << g.report << "\n";
      return static_cast<int>(gf::cli::ExitCode::schema);
    }
  }
  return report["exit_code"].get<int>();
}

int execute(const Json& job, const Globals& g) {
  gf::cli::RunOptions options;
  options.jobs = g.jobs;
  options.timing = g.timing;
  try {
    if (!g.seed_text.empty()) {
      options.seed = parse_seed(g.seed_text, "--seed");
    } else if (const char* env = std::getenv("GERBEFORGE_SEED"); env && *env) {
      options.seed = parse_seed(env, "GERBEFORGE_SEED");
    } else if (job.is_object() && job.contains("seed")) {
      options.seed = gf::cli::integer_from_json(job["seed"], "job.seed").get_ui();
      if (gf::cli::integer_from_json(job["seed"], "job.seed") < 0)
        throw SchemaError("job.seed: must be nonnegative");
    }
    if (!job.is_object()) throw SchemaError("job: expected an object");
    return emit(gf::cli::run_job(job, options).report, g);
  } catch (const SchemaError& e) {
    std::cerr << "gerbeforge: " << e.what() << "\n";
    return emit(gf::cli::schema_error_report(e.what(), options.seed), g);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cech cohomology, gerbes and tame symbols, driven by JSON jobs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed_text, "Seed for every randomized task (fallback: GERBEFORGE_SEED)");
  app.add_option("--report", g.report, "Write the report here instead of stdout");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", g.jobs, "Tasks to run concurrently")->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "Include wall times (reports are then not reproducible)");
  app.fallthrough();

  std::string job_path;
  auto* run = app.add_subcommand("run", "Run a job file");
  run->add_option("--job", job_path, "Job file")->required();

  std::string nerve = "circle", group = "Z";
  std::vector<int> degrees{0, 1, 2};
  auto* cohomology = app.add_subcommand("cohomology", "Cohomology with constant coefficients");
  cohomology->add_option("--nerve", nerve, "Nerve preset")->capture_default_str();
  cohomology->add_option("--group", group, "Coefficient group, e.g. \"Z/2 + Z\"")->capture_default_str();
  cohomology->add_option("--degree", degrees, "Degrees (0..2)")->check(CLI::Range(0, 2));

  std::string a = "Z/2", b = "Z/2";
  std::vector<long> left, right;
  auto* cup = app.add_subcommand("cup", "Cup product of two degree-1 classes");
  auto* lift = app.add_subcommand("lift", "Heisenberg lifting gerbe of two degree-1 classes");
  for (auto* sub : {cup, lift}) {
    sub->add_option("--nerve", nerve, "Nerve preset")->capture_default_str();
    sub->add_option("--a", a, "Group of the left class")->capture_default_str();
    sub->add_option("--b", b, "Group of the right class")->capture_default_str();
    sub->add_option("--left", left, "Left class coordinates (default: first generator)")->delimiter(',');
    sub->add_option("--right", right, "Right class coordinates (default: first generator)")->delimiter(',');
  }

  std::vector<std::string> complexes;
  long samples = 6;
  auto* fourterm = app.add_subcommand("fourterm", "Verify d2 on packaged four-term complexes");
  fourterm->add_option("--library", complexes, "Complex names (default: all)");
  fourterm->add_option("--samples", samples, "Random sections per complex")->capture_default_str();

  std::vector<std::string> dk_groups{"Z/2", "Z/3", "Z/4"};
  auto* dk = app.add_subcommand("dk-verify", "Dold-Kan and Alexander-Whitney checks");
  dk->add_option("--groups", dk_groups, "Finite groups")->capture_default_str();

  long p = 0;
  std::string f_num, f_den = "1", g_num, g_den = "1", place;
  auto* tame = app.add_subcommand("tame", "Tame symbols and Weil reciprocity on the projective line");
  tame->add_option("--p", p, "Characteristic")->required();
  tame->add_option("--f", f_num, "Numerator of f, constant term first")->required();
  tame->add_option("--f-den", f_den, "Denominator of f")->capture_default_str();
  tame->add_option("--g", g_num, "Numerator of g")->required();
  tame->add_option("--g-den", g_den, "Denominator of g")->capture_default_str();
  tame->add_option("--place", place, "\"inf\" or a monic irreducible; omit for the reciprocity product");

  auto* selftest = app.add_subcommand("selftest", "Acceptance criteria 1-8");

  CLI11_PARSE(app, argc, argv);

  Json job;
  try {
    if (*run) {
      job = gf::cli::load_json(job_path);
    } else if (*cohomology) {
      job = gf::cli::cohomology_job(nerve, group, degrees);
    } else if (*cup || *lift) {
      job = gf::cli::pairing_job(*cup ? "cup" : "lift", nerve, a, b, left, right);
    } else if (*fourterm) {
      job = gf::cli::fourterm_job(complexes, samples);
    } else if (*dk) {
      job = gf::cli::dold_kan_job(dk_groups);
    } else if (*tame) {
      const Json v = place.empty() ? Json() : list_argument(place, "--place");
      job = gf::cli::tame_job(p, list_argument(f_num, "--f"), list_argument(f_den, "--f-den"),
                              list_argument(g_num, "--g"), list_argument(g_den, "--g-den"),
                              place.empty() ? nullptr : &v);
    } else if (*selftest) {
      job = gf::cli::selftest_job();
    }
  } catch (const SchemaError& e) {
    std::cerr << "gerbeforge: " << e.what() << "\n";
    return emit(gf::cli::schema_error_report(e.what(), gf::cli::default_seed), g);
  }
  return execute(job, g);
}
