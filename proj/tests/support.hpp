#pragma once

// Shared helpers for the test binaries: seeded generators of root systems,
// cones and saturated weight monoids, plus small constructors.

#include <memory>
#include <random>
#include <vector>

#include "sphmod/sphmod.hpp"

namespace sphmod::testing {

inline std::shared_ptr<const RootSystem> make_rs(std::vector<DynkinComponent> comps, int torus = 0) {
  return std::make_shared<const RootSystem>(build_root_system(DynkinSpec{std::move(comps), torus}));
}

inline MonoidSpec make_monoid(std::vector<DynkinComponent> comps, int torus, std::vector<IntVec> gens) {
  return build_monoid(make_rs(std::move(comps), torus), std::move(gens));
}

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Semisimple rank <= 3 with at most two torus dimensions.
  DynkinSpec small_spec() {
    static const std::vector<std::vector<DynkinComponent>> shapes = {
        {{'A', 1}},           {{'A', 2}},           {{'A', 3}},           {{'B', 2}},
        {{'B', 3}},           {{'C', 3}},           {{'G', 2}},           {{'A', 1}, {'A', 1}},
        {{'A', 1}, {'A', 2}}, {{'A', 1}, {'B', 2}}, {{'A', 1}, {'G', 2}}, {{'A', 1}, {'A', 1}, {'A', 1}},
    };
    DynkinSpec s;
    s.components = shapes[uniform(0, static_cast<int>(shapes.size()) - 1)];
    s.torus_rank = uniform(0, 2);
    return s;
  }

  /// Up to `max_gens` dominant weights, entries in [0, bound] (torus part in [-bound, bound]).
  std::vector<WeightVec> dominant_generators(const RootSystem& rs, int max_gens = 5, int bound = 4) {
    const int k = uniform(1, max_gens);
    std::vector<WeightVec> out;
    for (int g = 0; g < k; ++g) {
      WeightVec w;
      for (int i = 0; i < rs.semisimple_rank; ++i) w.push_back(uniform(0, bound));
      for (int i = 0; i < rs.torus_rank; ++i) w.push_back(uniform(-bound, bound));
      out.push_back(std::move(w));
    }
    return out;
  }

  /// A saturated monoid with pointed cone over a random small group. Small
  /// bounds make roots land in ZΓ far more often.
  MonoidSpec saturated_monoid(int bound = 4) {
    while (true) {
      auto rs = std::make_shared<const RootSystem>(build_root_system(small_spec()));
      auto gens = dominant_generators(*rs, 5, bound);
      if (rank_of(gens) == 0) continue;
      if (!Cone::from_generators(rs->dim(), gens).is_pointed()) continue;
      MonoidSpec m = build_monoid(rs, saturate(gens));
      if (m.saturated == true) return m;
    }
  }

  /// Up to `max_gens` nonzero integer vectors in [-3, 3]^dim spanning a pointed cone.
  std::vector<IntVec> pointed_generators(std::size_t dim, int max_gens = 8) {
    while (true) {
      // A positive functional keeps the cone pointed.
      IntVec w;
      for (std::size_t i = 0; i < dim; ++i) w.push_back(uniform(-2, 2));
      if (is_zero(w)) continue;
      const int k = uniform(1, max_gens);
      std::vector<IntVec> out;
      int attempts = 0;
      while (static_cast<int>(out.size()) < k && attempts++ < 200) {
        IntVec v;
        for (std::size_t i = 0; i < dim; ++i) v.push_back(uniform(-3, 3));
        if (dot(w, v) > 0) out.push_back(std::move(v));
      }
      if (!out.empty()) return out;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace sphmod::testing
