// Writes the fixture manifests into the given directory.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fixture_files.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures DIR\n";
    return 2;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  for (auto const& [name, text] : knit::fixtures::fixture_files()) {
    std::ofstream f(dir / name, std::ios::binary);
    f << text;
    if (!f) {
      std::cerr << "cannot write " << (dir / name) << "\n";
      return 1;
    }
  }
  return 0;
}
