// Writes every packaged four-term complex as a job file into a directory.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "gerbeforge/cli/commands.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gerbeforge-export-library <directory>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& entry : gf::library()) {
    const auto path = dir / (entry.name + ".json");
    std::ofstream out(path, std::ios::binary);
    out << gf::cli::fourterm_job_file(entry).dump(2) << "\n";
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    std::cout << path.string() << "\n";
  }
  return 0;
}
