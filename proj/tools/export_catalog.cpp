#include <filesystem>
#include <fstream>
#include <iostream>

#include "colorlie/algebra_file.hpp"
#include "colorlie/catalog.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: export_catalog DIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (int id = 1; id <= colorlie::catalog::entry_count; ++id) {
    const std::string name = (id < 10 ? "case-0" : "case-") + std::to_string(id) + ".alg";
    std::ofstream out(dir / name);
    const auto& e = colorlie::catalog::entry(id);
    out << "# expected: " << e.printed_series << "\n";
    if (e.parameterized()) out << "# the bracket parameter t is 1/mu\n";
    out << colorlie::write_algebra_file(colorlie::export_catalog_entry(id));
  }
  return 0;
}
