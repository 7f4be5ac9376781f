// Tangent weights of a few small saturated monoids, with the verdict of every
// condition. Usage: demo_tangent_weights

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "sphmod/sphmod.hpp"

using namespace sphmod;

namespace {

struct Example {
  std::string name;
  DynkinSpec spec;
  std::vector<IntVec> generators;
};

IntVec v(std::initializer_list<long> xs) {
  IntVec out;
  for (long x : xs) out.push_back(Int(x));
  return out;
}

}  // namespace

int main() {
  const std::vector<Example> examples = {
      {"SL2 / T (2 omega)", {{{'A', 1}}, 0}, {v({2})}},
      {"GL2 with two torus characters", {{{'A', 1}}, 1}, {v({1, 1}), v({1, -1})}},
      {"Spin5 / Spin4 (omega_1)", {{{'B', 2}}, 0}, {v({1, 0})}},
      {"SL3, free monoid", {{{'A', 2}}, 0}, {v({1, 0}), v({0, 1})}},
      {"G2 / SL3 (omega_1)", {{{'G', 2}}, 0}, {v({1, 0})}},
  };
  for (const auto& ex : examples) {
    const MonoidSpec m = build_monoid(std::make_shared<const RootSystem>(build_root_system(ex.spec)), ex.generators);
    const PhiResult r = compute_phi(m);
    std::printf("%s: %zu tangent weights\n", ex.name.c_str(), r.phi.size());
    for (const auto& c : r.candidates) {
      std::string line;
      for (std::size_t k = 0; k < c.verdicts.size(); ++k)
        line += " " + std::to_string(k + 1) + ":" + status_name(c.verdicts[k].status);
      std::printf("  %s %-14s%s\n", c.member ? "*" : " ", coeff_label(c.sigma.coeffs).c_str(), line.c_str());
    }
  }
}
