#pragma once

// Root systems of reductive groups: products of simple types A-G plus a
// central torus, with Bourbaki numbering of simple roots.
//
// Weights are integer vectors in fundamental-weight + torus coordinates, so
// entry i of a weight is its pairing with the simple coroot of index i.
// Torus coordinates pair to zero with every coroot.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sphmod/errors.hpp"
#include "sphmod/integer.hpp"

namespace sphmod {

struct DynkinComponent {
  char type = 'A';
  int rank = 1;

  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
  friend auto operator<=>(const DynkinComponent&, const DynkinComponent&) = default;
};

inline std::string label(const DynkinComponent& c) {
  return std::string(1, c.type) + std::to_string(c.rank);
}

struct DynkinSpec {
  std::vector<DynkinComponent> components;
  int torus_rank = 0;

  friend bool operator==(const DynkinSpec&, const DynkinSpec&) = default;
};

inline std::string label(const DynkinSpec& spec) {
  std::string s;
  for (const auto& c : spec.components) {
    if (!s.empty()) s += "x";
    s += label(c);
  }
  if (spec.torus_rank > 0) {
    if (!s.empty()) s += "x";
    s += "T" + std::to_string(spec.torus_rank);
  }
  return s.empty() ? std::string("T0") : s;
}

/// Simple-root coefficient vector (length = semisimple rank).
using RootCoeffs = std::vector<int>;

struct Root {
  RootCoeffs coeffs;  // global, one entry per simple root
  int height = 0;
  int length2 = 0;  // squared length; short roots of each component have 2
  int component = 0;
};

namespace detail {

inline void validate_component(const DynkinComponent& c) {
  auto bad = [&](const char* why) {
    throw InvalidInput("invalid Dynkin component " + label(c) + ": " + why);
  };
  switch (c.type) {
    case 'A':
      if (c.rank < 1) bad("A requires rank >= 1");
      break;
    case 'B':
      if (c.rank < 2) bad("B requires rank >= 2");
      break;
    case 'C':
      if (c.rank < 2) bad("C requires rank >= 2");
      break;
    case 'D':
      if (c.rank < 3) bad("D requires rank >= 3");
      break;
    case 'E':
      if (c.rank < 6 || c.rank > 8) bad("E requires rank 6, 7 or 8");
      break;
    case 'F':
      if (c.rank != 4) bad("F requires rank 4");
      break;
    case 'G':
      if (c.rank != 2) bad("G requires rank 2");
      break;
    default:
      bad("unknown type letter");
  }
}

/// C2 -> B2 and D3 -> A3.
inline DynkinComponent canonical_component(const DynkinComponent& c) {
  if (c.type == 'C' && c.rank == 2) return {'B', 2};
  if (c.type == 'D' && c.rank == 3) return {'A', 3};
  return c;
}

inline void link(std::vector<std::vector<int>>& m, int i, int j, int ij, int ji) {
  m[i][j] = ij;
  m[j][i] = ji;
}

}  // namespace detail

/// Cartan matrix of a simple type in Bourbaki numbering, m[i][j] = <a_i^v, a_j>.
inline std::vector<std::vector<int>> standard_cartan(const DynkinComponent& c) {
  const int r = c.rank;
  std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 2;
  switch (c.type) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) detail::link(m, i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < r; ++i) detail::link(m, i, i + 1, -1, -1);
      detail::link(m, r - 2, r - 1, -1, -2);
      break;
    case 'C':
      for (int i = 0; i + 2 < r; ++i) detail::link(m, i, i + 1, -1, -1);
      detail::link(m, r - 2, r - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) detail::link(m, i, i + 1, -1, -1);
      detail::link(m, r - 3, r - 1, -1, -1);
      break;
    case 'E':
      detail::link(m, 0, 2, -1, -1);
      detail::link(m, 1, 3, -1, -1);
      for (int i = 2; i + 1 < r; ++i) detail::link(m, i, i + 1, -1, -1);
      break;
    case 'F':
      detail::link(m, 0, 1, -1, -1);
      detail::link(m, 1, 2, -1, -2);
      detail::link(m, 2, 3, -1, -1);
      break;
    case 'G':
      detail::link(m, 0, 1, -3, -1);
      break;
    default:
      throw InvalidInput("unknown type letter");
  }
  return m;
}

/// Squared lengths of the simple roots, short roots normalized to 2.
inline std::vector<int> standard_lengths(const DynkinComponent& c) {
  std::vector<int> len(c.rank, 2);
  switch (c.type) {
    case 'B':
      for (int i = 0; i + 1 < c.rank; ++i) len[i] = 4;
      break;
    case 'C':
      len[c.rank - 1] = 4;
      break;
    case 'F':
      len[0] = len[1] = 4;
      break;
    case 'G':
      len[1] = 6;
      break;
    default:
      break;
  }
  return len;
}

struct RootSystem {
  DynkinSpec spec;                  // canonicalized
  std::vector<std::string> notes;   // canonicalizations applied to the input
  int semisimple_rank = 0;
  int torus_rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <a_i^v, a_j>
  std::vector<int> simple_length2;
  std::vector<int> component_of;      // per simple index
  std::vector<int> component_offset;  // first simple index of each component
  std::vector<Root> positive_roots;   // per component, by height then lex
  std::map<RootCoeffs, int> index_of;  // positive root coefficients -> index
  std::vector<std::vector<Rational>> cartan_inverse;

  std::size_t dim() const { return static_cast<std::size_t>(semisimple_rank + torus_rank); }
  std::size_t num_positive() const { return positive_roots.size(); }

  WeightVec weight_of(const RootCoeffs& coeffs) const {
    WeightVec w = zeros(dim());
    for (int i = 0; i < semisimple_rank; ++i) {
      long s = 0;
      for (int j = 0; j < semisimple_rank; ++j) s += static_cast<long>(cartan[i][j]) * coeffs[j];
      w[i] = s;
    }
    return w;
  }

  WeightVec weight_of(const IntVec& coeffs) const {
    WeightVec w = zeros(dim());
    for (int i = 0; i < semisimple_rank; ++i)
      for (int j = 0; j < semisimple_rank; ++j) w[i] += cartan[i][j] * coeffs[j];
    return w;
  }

  WeightVec simple_root(int i) const {
    check_index(i);
    RootCoeffs c(semisimple_rank, 0);
    c[i] = 1;
    return weight_of(c);
  }

  WeightVec fundamental_weight(int i) const {
    check_index(i);
    return unit(dim(), static_cast<std::size_t>(i));
  }

  /// Index of a positive root with these coefficients, or -1.
  int find_positive(const RootCoeffs& c) const {
    auto it = index_of.find(c);
    return it == index_of.end() ? -1 : it->second;
  }

  bool is_root_coeffs(const RootCoeffs& c) const {
    if (find_positive(c) >= 0) return true;
    RootCoeffs n(c);
    for (auto& x : n) x = -x;
    return find_positive(n) >= 0;
  }

  /// Squared length of the root with these coefficients (any sign).
  int length2_of(const RootCoeffs& c) const {
    long s = 0;
    for (int i = 0; i < semisimple_rank; ++i)
      for (int j = 0; j < semisimple_rank; ++j)
        s += static_cast<long>(c[i]) * c[j] * cartan[i][j] * simple_length2[i];
    return static_cast<int>(s / 2);
  }

  /// Simple-root coefficients of a root-lattice element; nullopt when the
  /// weight is not in the root lattice.
  std::optional<IntVec> root_coefficients(const WeightVec& w) const {
    if (w.size() != dim()) throw DimensionMismatch("weight has length " + std::to_string(w.size()) +
                                                   ", expected " + std::to_string(dim()));
    for (std::size_t t = semisimple_rank; t < dim(); ++t)
      if (w[t] != 0) return std::nullopt;
    IntVec k(semisimple_rank);
    for (int i = 0; i < semisimple_rank; ++i) {
      Rational s = 0;
      for (int j = 0; j < semisimple_rank; ++j) s += cartan_inverse[i][j] * w[j];
      if (boost::multiprecision::denominator(s) != 1) return std::nullopt;
      k[i] = boost::multiprecision::numerator(s);
    }
    return k;
  }

  /// Coefficients of the coroot of a positive root in the simple coroots.
  RootCoeffs coroot_coefficients(int positive_index) const {
    const Root& b = positive_roots.at(positive_index);
    RootCoeffs c(semisimple_rank, 0);
    for (int i = 0; i < semisimple_rank; ++i)
      c[i] = b.coeffs[i] * simple_length2[i] / b.length2;
    return c;
  }

  void check_index(int i) const {
    if (i < 0 || i >= semisimple_rank)
      throw InvalidInput("simple root index " + std::to_string(i) + " out of range");
  }
};

namespace detail {

inline std::vector<RootCoeffs> positive_roots_of(const std::vector<std::vector<int>>& cartan) {
  const int r = static_cast<int>(cartan.size());
  std::set<RootCoeffs> seen;
  std::vector<RootCoeffs> level, all;
  for (int i = 0; i < r; ++i) {
    RootCoeffs c(r, 0);
    c[i] = 1;
    level.push_back(c);
    seen.insert(c);
  }
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    all.insert(all.end(), level.begin(), level.end());
    std::vector<RootCoeffs> next;
    for (const auto& b : level) {
      for (int i = 0; i < r; ++i) {
        bool simple_i = true;
        for (int j = 0; j < r; ++j) simple_i = simple_i && b[j] == (j == i ? 1 : 0);
        if (simple_i) continue;
        int p = 0;
        RootCoeffs d(b);
        while (true) {
          d[i] -= 1;
          if (!seen.count(d)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += cartan[i][j] * b[j];
        if (p - pairing > 0) {
          RootCoeffs up(b);
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
  return all;
}

inline std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvalidInput("singular Cartan matrix");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace detail

inline RootSystem build_root_system(const DynkinSpec& input) {
  if (input.torus_rank < 0) throw InvalidInput("torus_rank must be non-negative");
  RootSystem rs;
  rs.torus_rank = input.torus_rank;
  rs.spec.torus_rank = input.torus_rank;
  for (const auto& c : input.components) {
    detail::validate_component(c);
    DynkinComponent cc = detail::canonical_component(c);
    if (cc != c) rs.notes.push_back(label(c) + " canonicalized to " + label(cc));
    rs.spec.components.push_back(cc);
  }

  int s = 0;
  for (const auto& c : rs.spec.components) s += c.rank;
  rs.semisimple_rank = s;
  rs.cartan.assign(s, std::vector<int>(s, 0));
  rs.simple_length2.assign(s, 2);
  rs.component_of.assign(s, 0);

  int offset = 0;
  for (std::size_t k = 0; k < rs.spec.components.size(); ++k) {
    const auto& c = rs.spec.components[k];
    rs.component_offset.push_back(offset);
    auto m = standard_cartan(c);
    auto len = standard_lengths(c);
    for (int i = 0; i < c.rank; ++i) {
      rs.simple_length2[offset + i] = len[i];
      rs.component_of[offset + i] = static_cast<int>(k);
      for (int j = 0; j < c.rank; ++j) rs.cartan[offset + i][offset + j] = m[i][j];
    }
    for (const auto& local : detail::positive_roots_of(m)) {
      Root root;
      root.coeffs.assign(s, 0);
      std::copy(local.begin(), local.end(), root.coeffs.begin() + offset);
      root.height = std::accumulate(local.begin(), local.end(), 0);
      root.component = static_cast<int>(k);
      rs.positive_roots.push_back(std::move(root));
    }
    offset += c.rank;
  }
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
    auto& root = rs.positive_roots[i];
    root.length2 = rs.length2_of(root.coeffs);
    rs.index_of[root.coeffs] = static_cast<int>(i);
  }
  rs.cartan_inverse = detail::invert(rs.cartan);
  return rs;
}

/// <a_i^v, lambda>.
inline Int pairing(const RootSystem& rs, int i, const WeightVec& lambda) {
  rs.check_index(i);
  if (lambda.size() != rs.dim()) throw DimensionMismatch("pairing: weight length mismatch");
  return lambda[static_cast<std::size_t>(i)];
}

/// Positive-root index of a weight that is a positive root; throws otherwise.
inline int positive_root_index(const RootSystem& rs, const WeightVec& beta) {
  auto k = rs.root_coefficients(beta);
  if (!k) throw NotARoot(to_string(beta) + " is not in the root lattice");
  RootCoeffs c;
  for (const auto& x : *k) {
    if (abs(x) > 100) throw NotARoot(to_string(beta) + " is not a root");
    c.push_back(static_cast<int>(x));
  }
  int idx = rs.find_positive(c);
  if (idx < 0) throw NotARoot(to_string(beta) + " is not a positive root");
  return idx;
}

/// <beta^v, lambda> = 2 (beta, lambda) / (beta, beta) for a positive root beta.
inline Int coroot_pairing_general(const RootSystem& rs, const WeightVec& beta, const WeightVec& lambda) {
  if (lambda.size() != rs.dim()) throw DimensionMismatch("coroot pairing: weight length mismatch");
  const int idx = positive_root_index(rs, beta);
  const auto cv = rs.coroot_coefficients(idx);
  Int s = 0;
  for (int i = 0; i < rs.semisimple_rank; ++i) s += cv[i] * lambda[i];
  return s;
}

/// Indices of simple roots with nonzero coefficient in a root-lattice element.
inline std::vector<int> support(const RootSystem& rs, const WeightVec& sigma) {
  auto k = rs.root_coefficients(sigma);
  if (!k) throw NotInRootLattice(to_string(sigma) + " is not in the root lattice");
  std::vector<int> s;
  for (int i = 0; i < rs.semisimple_rank; ++i)
    if ((*k)[i] != 0) s.push_back(i);
  return s;
}

inline bool is_positive_root(const RootSystem& rs, const WeightVec& sigma) {
  auto k = rs.root_coefficients(sigma);
  if (!k) return false;
  RootCoeffs c;
  for (const auto& x : *k) {
    if (x < 0 || x > 100) return false;
    c.push_back(static_cast<int>(x));
  }
  return rs.find_positive(c) >= 0;
}

inline bool is_dominant(const RootSystem& rs, const WeightVec& lambda) {
  if (lambda.size() != rs.dim()) throw DimensionMismatch("is_dominant: weight length mismatch");
  for (int i = 0; i < rs.semisimple_rank; ++i)
    if (lambda[i] < 0) return false;
  return true;
}

/// A connected component of an induced Dynkin subdiagram.
/// numberings[k][j] is the (global, 0-based) index of simple root j+1 of the
/// component under the k-th valid Bourbaki numbering.
struct SubdiagramComponent {
  DynkinComponent type;
  std::vector<std::vector<int>> numberings;

  /// Map old index -> new 0-based index for one numbering.
  std::map<int, int> old_to_new(std::size_t k = 0) const {
    std::map<int, int> m;
    for (std::size_t j = 0; j < numberings.at(k).size(); ++j) m[numberings[k][j]] = static_cast<int>(j);
    return m;
  }
};

namespace detail {

inline void match_numberings(const RootSystem& rs, const std::vector<int>& nodes,
                             const std::vector<std::vector<int>>& target, std::vector<int>& chosen,
                             std::vector<bool>& used, std::vector<std::vector<int>>& out) {
  const std::size_t k = chosen.size();
  if (k == nodes.size()) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    if (used[u]) continue;
    const int g = nodes[u];
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      ok = rs.cartan[g][chosen[j]] == target[k][j] && rs.cartan[chosen[j]][g] == target[j][k];
    }
    if (!ok) continue;
    used[u] = true;
    chosen.push_back(g);
    match_numberings(rs, nodes, target, chosen, used, out);
    chosen.pop_back();
    used[u] = false;
  }
}

inline std::vector<DynkinComponent> candidate_types(int m) {
  std::vector<DynkinComponent> c{{'A', m}};
  if (m >= 2) c.push_back({'B', m});
  if (m >= 3) c.push_back({'C', m});
  if (m >= 4) c.push_back({'D', m});
  if (m >= 6 && m <= 8) c.push_back({'E', m});
  if (m == 4) c.push_back({'F', 4});
  if (m == 2) c.push_back({'G', 2});
  return c;
}

}  // namespace detail

/// Decomposes the Dynkin diagram induced on `subset` into connected
/// components, classifies each, and lists every Bourbaki-compatible numbering.
inline std::vector<SubdiagramComponent> subdiagram_type(const RootSystem& rs, const std::vector<int>& subset) {
  std::set<int> nodes(subset.begin(), subset.end());
  for (int i : nodes) rs.check_index(i);

  std::vector<SubdiagramComponent> result;
  std::set<int> visited;
  for (int start : nodes) {
    if (visited.count(start)) continue;
    std::vector<int> comp{start};
    visited.insert(start);
    for (std::size_t q = 0; q < comp.size(); ++q) {
      for (int v : nodes) {
        if (!visited.count(v) && rs.cartan[comp[q]][v] != 0) {
          visited.insert(v);
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    const int m = static_cast<int>(comp.size());
    SubdiagramComponent sc;
    for (const auto& t : detail::candidate_types(m)) {
      auto target = standard_cartan(t);
      std::vector<int> chosen;
      std::vector<bool> used(comp.size(), false);
      std::vector<std::vector<int>> found;
      detail::match_numberings(rs, comp, target, chosen, used, found);
      if (!found.empty()) {
        sc.type = t;
        std::sort(found.begin(), found.end());
        sc.numberings = std::move(found);
        break;
      }
    }
    if (sc.numberings.empty()) throw Error("unclassifiable subdiagram");  // unreachable for valid input
    result.push_back(std::move(sc));
  }
  return result;
}

}  // namespace sphmod
