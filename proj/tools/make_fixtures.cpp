// Writes every bundled fixture as a canonical algebra file.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hlr/fixtures.hpp"
#include "hlr/io.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);
  for (const auto& f : hlr::fixtures::all()) {
    const auto path = dir / (f.name + ".json");
    std::ofstream(path, std::ios::binary) << hlr::serialize_algebra(f.algebra);
    std::cout << path.string() << "\n";
  }
}
