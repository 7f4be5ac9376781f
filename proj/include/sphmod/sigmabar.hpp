#pragma once

// The finite catalogue of spherically closed spherical roots of a reductive
// group: thirteen coefficient patterns on connected supports of given type,
// plus sums of two orthogonal simple roots. Each element carries its
// distinguished subset
//   Pi_sigma = { g in Supp sigma : <g^v, sigma> = 0 and sigma - g not a positive root }.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sphmod/errors.hpp"
#include "sphmod/integer.hpp"
#include "sphmod/rootsys.hpp"

namespace sphmod {

struct SphericalRoot {
  IntVec coeffs;                 // simple-root coefficients, length = semisimple rank
  WeightVec weight;              // same element in weight coordinates
  int row = 0;                   // 1..13
  std::vector<int> support;      // sorted global indices (0-based)
  std::string support_type;      // "A3", "B2", "A1xA1", ...
  std::vector<int> numbering;    // global index of new simple root j+1 in the row's numbering
  std::vector<int> pi_sigma;     // sorted global indices

  friend bool operator==(const SphericalRoot&, const SphericalRoot&) = default;
};

/// Coefficient pattern (in the Bourbaki numbering of the support) of every
/// row whose support type is `t`; row 3 is handled separately.
inline std::vector<std::pair<int, std::vector<int>>> row_patterns(const DynkinComponent& t) {
  const int r = t.rank;
  std::vector<std::pair<int, std::vector<int>>> out;
  switch (t.type) {
    case 'A':
      if (r == 1) {
        out.push_back({1, {1}});
        out.push_back({2, {2}});
      } else {
        out.push_back({4, std::vector<int>(r, 1)});
        if (r == 3) out.push_back({5, {1, 2, 1}});
      }
      break;
    case 'B':
      out.push_back({6, std::vector<int>(r, 1)});
      out.push_back({7, std::vector<int>(r, 2)});
      if (r == 3) out.push_back({8, {1, 2, 3}});
      break;
    case 'C': {
      std::vector<int> p(r, 2);
      p.front() = 1;
      p.back() = 1;
      out.push_back({9, p});
      break;
    }
    case 'D': {
      std::vector<int> p(r, 2);
      p[r - 2] = 1;
      p[r - 1] = 1;
      out.push_back({10, p});
      break;
    }
    case 'F':
      out.push_back({11, {1, 2, 3, 2}});
      break;
    case 'G':
      out.push_back({12, {1, 1}});
      out.push_back({13, {4, 2}});
      break;
    default:
      break;
  }
  return out;
}

namespace detail {

inline std::vector<int> nonzero_indices(const IntVec& c) {
  std::vector<int> s;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

inline bool is_positive_root_coeffs(const RootSystem& rs, const IntVec& c) {
  RootCoeffs rc;
  for (const auto& x : c) {
    if (x < 0 || x > 100) return false;
    rc.push_back(static_cast<int>(x));
  }
  return rs.find_positive(rc) >= 0;
}

inline std::vector<int> pi_sigma_of_coeffs(const RootSystem& rs, const IntVec& coeffs) {
  const WeightVec w = rs.weight_of(coeffs);
  std::vector<int> out;
  for (int g : nonzero_indices(coeffs)) {
    if (w[g] != 0) continue;
    IntVec d(coeffs);
    d[g] -= 1;
    if (!is_positive_root_coeffs(rs, d)) out.push_back(g);
  }
  return out;
}

inline IntVec checked_coeffs(const RootSystem& rs, const WeightVec& sigma) {
  auto k = rs.root_coefficients(sigma);
  if (!k) throw NotInRootLattice(to_string(sigma) + " is not in the root lattice");
  bool nonzero = false;
  for (const auto& x : *k) {
    if (x < 0) throw NotInRootLattice(to_string(sigma) + " is not in Z+Pi");
    nonzero = nonzero || x != 0;
  }
  if (!nonzero) throw NotInRootLattice("sigma must be nonzero");
  return *k;
}

inline SphericalRoot make_spherical_root(const RootSystem& rs, IntVec coeffs, int row, std::string type,
                                         std::vector<int> numbering) {
  SphericalRoot s;
  s.weight = rs.weight_of(coeffs);
  s.support = nonzero_indices(coeffs);
  s.pi_sigma = pi_sigma_of_coeffs(rs, coeffs);
  if (row == 11) {
    // The listed subset is the whole orthogonal support here, although
    // sigma - alpha_3 is a root.
    s.pi_sigma.clear();
    for (int g : s.support)
      if (s.weight[g] == 0) s.pi_sigma.push_back(g);
  }
  s.coeffs = std::move(coeffs);
  s.row = row;
  s.support_type = std::move(type);
  s.numbering = std::move(numbering);
  return s;
}

}  // namespace detail

/// Matches sigma against every row; nullopt when sigma is not in the catalogue.
inline std::optional<SphericalRoot> classify_sigma(const RootSystem& rs, const WeightVec& sigma) {
  auto k = rs.root_coefficients(sigma);
  if (!k) return std::nullopt;
  for (const auto& x : *k)
    if (x < 0) return std::nullopt;
  const auto supp = detail::nonzero_indices(*k);
  if (supp.empty()) return std::nullopt;
  const auto comps = subdiagram_type(rs, supp);
  if (comps.size() == 2) {
    const bool a1a1 = comps[0].type == DynkinComponent{'A', 1} && comps[1].type == DynkinComponent{'A', 1};
    if (a1a1 && (*k)[supp[0]] == 1 && (*k)[supp[1]] == 1)
      return detail::make_spherical_root(rs, *k, 3, "A1xA1", supp);
    return std::nullopt;
  }
  if (comps.size() != 1) return std::nullopt;
  const auto& comp = comps.front();
  for (const auto& [row, pattern] : row_patterns(comp.type)) {
    for (const auto& nb : comp.numberings) {
      bool match = true;
      for (std::size_t j = 0; j < nb.size() && match; ++j) match = (*k)[nb[j]] == pattern[j];
      if (match) return detail::make_spherical_root(rs, *k, row, label(comp.type), nb);
    }
  }
  return std::nullopt;
}

/// Pi_sigma for sigma in Z+Pi \ {0}: the listed subset for catalogue
/// elements, otherwise the orthogonal simple roots gamma with sigma - gamma
/// not a root.
inline std::vector<int> pi_sigma(const RootSystem& rs, const WeightVec& sigma) {
  const IntVec coeffs = detail::checked_coeffs(rs, sigma);
  if (auto s = classify_sigma(rs, sigma)) return s->pi_sigma;
  return detail::pi_sigma_of_coeffs(rs, coeffs);
}

/// Every element of the catalogue realizable in rs, each exactly once,
/// ordered by (row, coefficient vector).
inline std::vector<SphericalRoot> enumerate_sigmabar(const RootSystem& rs) {
  const int s = rs.semisimple_rank;
  std::map<IntVec, SphericalRoot> found;
  auto emit = [&](IntVec coeffs, int row, std::string type, std::vector<int> nb) {
    if (found.count(coeffs)) return;
    auto sr = detail::make_spherical_root(rs, coeffs, row, std::move(type), std::move(nb));
    found.emplace(std::move(coeffs), std::move(sr));
  };

  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      if (rs.cartan[i][j] != 0) continue;
      IntVec c = zeros(s);
      c[i] = c[j] = 1;
      emit(c, 3, "A1xA1", {i, j});
    }
  }
  for (std::size_t comp = 0; comp < rs.spec.components.size(); ++comp) {
    const int off = rs.component_offset[comp];
    const int r = rs.spec.components[comp].rank;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) subset.push_back(off + i);
      const auto parts = subdiagram_type(rs, subset);
      if (parts.size() != 1) continue;
      for (const auto& [row, pattern] : row_patterns(parts[0].type)) {
        for (const auto& nb : parts[0].numberings) {
          IntVec c = zeros(s);
          for (std::size_t j = 0; j < nb.size(); ++j) c[nb[j]] = pattern[j];
          emit(c, row, label(parts[0].type), nb);
        }
      }
    }
  }
  std::vector<SphericalRoot> out;
  for (auto& [c, sr] : found) out.push_back(std::move(sr));
  std::sort(out.begin(), out.end(), [](const SphericalRoot& a, const SphericalRoot& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.coeffs < b.coeffs;
  });
  return out;
}

/// "2a1+a3"-style label of a coefficient vector (1-based indices).
inline std::string coeff_label(const IntVec& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += c[i] > 0 ? "+" : "-";
    else if (c[i] < 0) s += "-";
    Int a = abs(c[i]);
    if (a != 1) s += a.str();
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? std::string("0") : s;
}

}  // namespace sphmod
