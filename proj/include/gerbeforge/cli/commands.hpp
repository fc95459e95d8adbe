#pragma once

#include <string>
#include <vector>

#include "gerbeforge/cli/json_io.hpp"
#include "gerbeforge/fourterm/library.hpp"

namespace gf::cli {

// Each subcommand is sugar for a generated job; these build those jobs.

// Group text ("Z/2 + Z") on a nerve preset, one cohomology task per degree.
Json cohomology_job(const std::string& nerve, const std::string& group, const std::vector<int>& degrees);

// Cup product (op "cup") or Heisenberg lift (op "lift") of two classes with
// constant coefficients. Empty class lists select the first H^1 generator.
Json pairing_job(const std::string& op, const std::string& nerve, const std::string& a, const std::string& b,
                 const std::vector<long>& left_class, const std::vector<long>& right_class);

// d2 verification over packaged complexes; an empty list means all of them.
Json fourterm_job(const std::vector<std::string>& names, long samples);

// Dold-Kan in degrees 1 and 2 for every group, plus the Alexander-Whitney
// cup for every ordered pair.
Json dold_kan_job(const std::vector<std::string>& groups);

// Tame symbol at one place when place is given, else the Weil product.
// Polynomials and places use the job syntax (JSON lists, "inf").
Json tame_job(long p, const Json& f_num, const Json& f_den, const Json& g_num, const Json& g_den,
              const Json* place);

// A packaged four-term complex written out as a standalone job: explicit
// nerve, systems and homs, plus one verify_d2 task.
Json fourterm_job_file(const LibraryComplex& entry);

// Acceptance criteria 1 through 8.
Json selftest_job();

}  // namespace gf::cli
