// Prints the spherically closed roots of each listed type with their row and
// distinguished subset (1-based). Usage: demo_table_regeneration [A4 B3 ...]

#include <cstdio>
#include <string>
#include <vector>

#include "sphmod/sphmod.hpp"

using namespace sphmod;

int main(int argc, char** argv) {
  std::vector<std::string> types = {"A4", "B4", "C4", "D4", "F4", "G2"};
  if (argc > 1) types.assign(argv + 1, argv + argc);
  for (const auto& t : types) {
    const DynkinComponent c{t[0], std::stoi(t.substr(1))};
    const RootSystem rs = build_root_system(DynkinSpec{{c}, 0});
    const auto all = enumerate_sigmabar(rs);
    std::printf("%s: %zu elements\n", label(rs.spec).c_str(), all.size());
    for (const auto& s : all) {
      std::string pi;
      for (int g : s.pi_sigma) pi += (pi.empty() ? "" : ",") + std::to_string(g + 1);
      std::printf("  row %2d  %-8s %-16s pi={%s}\n", s.row, s.support_type.c_str(), coeff_label(s.coeffs).c_str(),
                  pi.c_str());
    }
  }
}
