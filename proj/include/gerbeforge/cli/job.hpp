#pragma once

#include <cstdint>
#include <string>

#include "gerbeforge/cli/json_io.hpp"
#include "gerbeforge/fourterm/complex.hpp"

namespace gf::cli {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int job_version = 1;
inline constexpr std::uint64_t default_seed = 20240611;

enum class ExitCode : int { ok = 0, failure = 1, schema = 2, invariant = 3 };

struct RunOptions {
  std::uint64_t seed = default_seed;
  int jobs = 1;         // tasks run concurrently when > 1
  bool timing = false;  // per-task wall time in the report
};

struct RunOutcome {
  Json report;
  ExitCode exit_code = ExitCode::ok;
};

// Validates the whole job (schema, references, definitions) before any task
// runs; throws SchemaError on the first problem. Task failures and errors are
// recorded in the report, never thrown.
RunOutcome run_job(const Json& job, const RunOptions& options);

// Builds the job's definitions and returns the four-term complex with the
// given name; SchemaError when the job or the name is invalid.
FourTermComplex load_fourterm(const Json& job, const std::string& name);

// Reads a JSON file; SchemaError when unreadable or malformed.
Json load_json(const std::string& path);

// Machine-readable report or the human summary.
std::string render_json(const Json& report);
std::string render_text(const Json& report);

// The report of a job that could not be validated.
Json schema_error_report(const std::string& message, std::uint64_t seed);

}  // namespace gf::cli
