#pragma once

// Chevalley basis structure constants N_{a,b}, [e_a, e_b] = N_{a,b} e_{a+b}.
//
// Signs on pairs of positive roots come from explicit sign tables for types
// A, B, C, D (matrix realizations) and from the extraspecial-pair recursion
// for F4 and G2. All remaining constants follow from
//   N_{a,b} = -N_{b,a},  N_{-a,-b} = -N_{a,b},
//   N_{a,-b} = -N_{b,a-b} |a-b|^2/|a|^2   if a-b is a positive root,
//   N_{a,-b} =  N_{b-a,a} |b-a|^2/|b|^2   if b-a is a positive root.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sphmod/errors.hpp"
#include "sphmod/integer.hpp"
#include "sphmod/rootsys.hpp"

namespace sphmod {

/// Which construction fixed the positive-positive signs of a component.
enum class SignSource { SignTable, Extraspecial };

/// Label of a positive root of a classical simple type in the sign tables:
/// alpha_{ij} or beta_{ij} (1-based i, j).
struct ClassicalLabel {
  bool beta = false;
  int i = 0;
  int j = 0;

  friend bool operator==(const ClassicalLabel&, const ClassicalLabel&) = default;
};

/// Positive roots of A_r/B_r/C_r/D_r keyed by their table labels.
inline std::map<RootCoeffs, ClassicalLabel> classical_labels(const DynkinComponent& c) {
  const int r = c.rank;
  std::map<RootCoeffs, ClassicalLabel> out;
  auto alpha_range = [&](int i, int j) {
    RootCoeffs v(r, 0);
    for (int k = i; k <= j; ++k) v[k - 1] += 1;
    return v;
  };
  auto add = [](RootCoeffs a, const RootCoeffs& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
  };
  switch (c.type) {
    case 'A':
      for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) out[alpha_range(i, j)] = {false, i, j};
      break;
    case 'B':
      for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) out[alpha_range(i, j)] = {false, i, j};
      for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) out[add(alpha_range(i, r), alpha_range(j, r))] = {true, i, j};
      break;
    case 'C':
      for (int i = 1; i <= r - 1; ++i)
        for (int j = i; j <= r - 1; ++j) out[alpha_range(i, j)] = {false, i, j};
      for (int i = 1; i <= r; ++i) out[alpha_range(i, r)] = {true, i, r};
      for (int i = 1; i <= r - 1; ++i)
        for (int j = i; j <= r - 1; ++j) {
          RootCoeffs v = add(alpha_range(i, r - 1), alpha_range(j, r - 1));
          v[r - 1] += 1;
          out[v] = {true, i, j};
        }
      break;
    case 'D': {
      // alpha_r - alpha_{r-1}
      RootCoeffs twist(r, 0);
      twist[r - 1] = 1;
      twist[r - 2] = -1;
      for (int i = 1; i <= r - 1; ++i)
        for (int j = i; j <= r - 1; ++j) out[alpha_range(i, j)] = {false, i, j};
      for (int i = 1; i <= r - 1; ++i) out[add(alpha_range(i, r - 1), twist)] = {true, i, r};
      for (int i = 1; i <= r - 1; ++i)
        for (int j = i + 1; j <= r - 1; ++j)
          out[add(add(alpha_range(i, r - 1), twist), alpha_range(j, r - 1))] = {true, i, j};
      break;
    }
    default:
      throw UnsupportedType("no sign table for type " + label(c));
  }
  return out;
}

/// Sign of N_{x,y} for positive roots x, y of a classical type as prescribed
/// by the sign tables; 0 when no table condition matches.
inline int table_sign(char type, int r, const ClassicalLabel& x, const ClassicalLabel& y) {
  if (x.beta && y.beta) return 0;
  if (!x.beta && y.beta) return -table_sign(type, r, y, x);
  const int i = x.i, j = x.j, k = y.i, l = y.j;
  if (!x.beta) {
    if (k == j + 1) return +1;
    if (i == l + 1) return -1;
    if (type == 'B' && j == r && l == r) {
      if (i < k) return -1;
      if (k < i) return +1;
    }
    return 0;
  }
  switch (type) {
    case 'B':
    case 'D':
      if (i == l + 1) return -1;
      if (j == l + 1 && k < i) return +1;
      if (j == l + 1 && i < k) return -1;
      return 0;
    case 'C':
      if (i == l + 1) return -1;
      if (j == l + 1) return -1;
      return 0;
    default:
      return 0;
  }
}

/// Dense table of structure constants over all roots. Root index k < P is the
/// k-th positive root of the root system, index P + k is its negative.
struct StructureConstantTable {
  std::shared_ptr<const RootSystem> rs;
  int num_positive = 0;
  std::vector<SignSource> sources;                 // per component
  std::vector<std::vector<int>> sum;              // index of a+b, -1 if not a root, -2 if zero
  std::vector<std::vector<int>> n;                 // N_{a,b}, 0 when a+b is not a root

  int num_roots() const { return 2 * num_positive; }
  int negate(int a) const { return a < num_positive ? a + num_positive : a - num_positive; }
  bool is_positive(int a) const { return a < num_positive; }

  RootCoeffs coeffs(int a) const {
    RootCoeffs c = rs->positive_roots[a % num_positive].coeffs;
    if (!is_positive(a))
      for (auto& x : c) x = -x;
    return c;
  }

  int length2(int a) const { return rs->positive_roots[a % num_positive].length2; }

  int index(const RootCoeffs& c) const {
    int p = rs->find_positive(c);
    if (p >= 0) return p;
    RootCoeffs m(c);
    for (auto& x : m) x = -x;
    p = rs->find_positive(m);
    return p >= 0 ? p + num_positive : -1;
  }

  /// Largest p >= 0 with b - p a a root.
  int string_p(int a, int b) const {
    RootCoeffs ca = coeffs(a), cb = coeffs(b);
    int p = 0;
    while (true) {
      for (std::size_t i = 0; i < cb.size(); ++i) cb[i] -= ca[i];
      if (index(cb) < 0) return p;
      ++p;
    }
  }

  int constant(int a, int b) const { return n.at(a).at(b); }
};

namespace detail {

inline StructureConstantTable empty_table(std::shared_ptr<const RootSystem> rs) {
  StructureConstantTable t;
  t.num_positive = static_cast<int>(rs->num_positive());
  t.rs = std::move(rs);
  const int m = t.num_roots();
  t.sum.assign(m, std::vector<int>(m, -1));
  t.n.assign(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a) {
    RootCoeffs ca = t.coeffs(a);
    for (int b = 0; b < m; ++b) {
      if (b == t.negate(a)) {
        t.sum[a][b] = -2;
        continue;
      }
      RootCoeffs s = ca;
      RootCoeffs cb = t.coeffs(b);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += cb[i];
      t.sum[a][b] = t.index(s);
    }
  }
  return t;
}

/// Positive-positive constants of one component from the sign tables.
inline void fill_from_sign_table(StructureConstantTable& t, int component) {
  const RootSystem& rs = *t.rs;
  const DynkinComponent& c = rs.spec.components[component];
  if (c.rank < 2) return;
  const int off = rs.component_offset[component];
  const auto labels = classical_labels(c);
  auto local = [&](int a) {
    RootCoeffs v(rs.positive_roots[a].coeffs.begin() + off, rs.positive_roots[a].coeffs.begin() + off + c.rank);
    return labels.at(v);
  };
  for (int a = 0; a < t.num_positive; ++a) {
    if (rs.positive_roots[a].component != component) continue;
    for (int b = 0; b < t.num_positive; ++b) {
      if (rs.positive_roots[b].component != component || t.sum[a][b] < 0) continue;
      const int sign = table_sign(c.type, c.rank, local(a), local(b));
      if (sign == 0)
        throw Error("sign table covers no condition for a root pair of " + label(c));
      t.n[a][b] = sign * (t.string_p(a, b) + 1);
    }
  }
}

/// Positive-positive constants of one component by the extraspecial-pair
/// recursion: roots are ordered by (height, coefficients); for each
/// non-simple root x the special pair (a, b), a < b, a + b = x with minimal a
/// gets N_{a,b} = +(p+1), all other special pairs follow from the
/// four-root relation.
inline void fill_extraspecial(StructureConstantTable& t, int component) {
  const RootSystem& rs = *t.rs;
  std::vector<int> order;
  for (int a = 0; a < t.num_positive; ++a)
    if (rs.positive_roots[a].component == component) order.push_back(a);
  // positive_roots is already sorted by height then coefficients per component.
  std::map<int, int> rank_of_root;
  for (std::size_t k = 0; k < order.size(); ++k) rank_of_root[order[k]] = static_cast<int>(k);

  auto known = [&](int a, int b) -> Rational {
    // N for any pair (sign combination) whose positive constituents are known.
    return Rational(t.n[a][b]);
  };
  auto mixed = [&](int a, int b) -> Rational {
    // a positive, b negative: N_{a,b} with b = -c.
    const int c = t.negate(b);
    const int d1 = t.sum[a][b];  // a - c
    if (d1 < 0) return 0;
    if (t.is_positive(d1)) return -known(c, d1) * t.length2(d1) / t.length2(a);
    const int e = t.negate(d1);  // c - a
    return known(e, a) * t.length2(e) / t.length2(c);
  };
  auto any = [&](int a, int b) -> Rational {
    if (t.sum[a][b] < 0) return 0;
    if (t.is_positive(a) && t.is_positive(b)) return known(a, b);
    if (!t.is_positive(a) && !t.is_positive(b)) return -known(t.negate(a), t.negate(b));
    if (t.is_positive(a)) return mixed(a, b);
    return -mixed(b, a);
  };

  for (int x : order) {
    std::vector<std::pair<int, int>> special;
    for (int a : order) {
      for (int b : order) {
        if (rank_of_root[a] < rank_of_root[b] && t.sum[a][b] == x) special.emplace_back(a, b);
      }
    }
    if (special.empty()) continue;
    std::sort(special.begin(), special.end(),
              [&](auto& u, auto& v) { return rank_of_root[u.first] < rank_of_root[v.first]; });
    const auto [a, b] = special.front();
    t.n[a][b] = t.string_p(a, b) + 1;
    t.n[b][a] = -t.n[a][b];
    for (std::size_t k = 1; k < special.size(); ++k) {
      const auto [g, d] = special[k];
      const int ng = t.negate(g), nd = t.negate(d);
      Rational s = 0;
      const int bg = t.sum[b][ng];  // b - g
      if (bg >= 0) s += any(b, ng) * any(a, nd) / t.length2(bg);
      const int ag = t.sum[a][ng];  // a - g
      if (ag >= 0) s += any(ng, a) * any(b, nd) / t.length2(ag);
      Rational val = s * t.length2(x) / t.n[a][b];
      if (boost::multiprecision::denominator(val) != 1) throw Error("extraspecial recursion produced a non-integer");
      t.n[g][d] = static_cast<int>(boost::multiprecision::numerator(val));
      t.n[d][g] = -t.n[g][d];
    }
  }
}

inline void fill_from_positive(StructureConstantTable& t) {
  const int p = t.num_positive;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (t.sum[a][b] >= 0) t.n[t.negate(a)][t.negate(b)] = -t.n[a][b];
      const int nb = t.negate(b);
      const int d = t.sum[a][nb];  // a - b
      if (d < 0) continue;
      long val;
      if (t.is_positive(d)) {
        const long num = -static_cast<long>(t.n[b][d]) * t.length2(d);
        if (num % t.length2(a) != 0) throw Error("non-integral N_{a,-b}");
        val = num / t.length2(a);
      } else {
        const int e = t.negate(d);  // b - a
        const long num = static_cast<long>(t.n[e][a]) * t.length2(e);
        if (num % t.length2(b) != 0) throw Error("non-integral N_{a,-b}");
        val = num / t.length2(b);
      }
      t.n[a][nb] = static_cast<int>(val);
      t.n[nb][a] = -static_cast<int>(val);
    }
  }
}

}  // namespace detail

/// Builds the full table. E-type components are rejected.
inline StructureConstantTable build_constants(std::shared_ptr<const RootSystem> rs) {
  for (const auto& c : rs->spec.components)
    if (c.type == 'E') throw UnsupportedType("structure constants for type " + label(c) + " are not supported");
  auto t = detail::empty_table(std::move(rs));
  const auto& comps = t.rs->spec.components;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (comps[k].type == 'F' || comps[k].type == 'G') {
      t.sources.push_back(SignSource::Extraspecial);
      detail::fill_extraspecial(t, static_cast<int>(k));
    } else {
      t.sources.push_back(SignSource::SignTable);
      detail::fill_from_sign_table(t, static_cast<int>(k));
    }
  }
  detail::fill_from_positive(t);
  return t;
}

/// Element of the Lie algebra in the Chevalley basis: coefficients on
/// h_1..h_s (simple coroots) followed by e_a for every root index a.
struct LieElement {
  std::map<int, std::int64_t> terms;  // basis index -> coefficient

  bool is_zero() const {
    for (const auto& [k, v] : terms)
      if (v != 0) return false;
    return true;
  }
  void add(int k, std::int64_t v) {
    if (v == 0) return;
    auto& slot = terms[k];
    slot += v;
    if (slot == 0) terms.erase(k);
  }
  void add(const LieElement& o, std::int64_t scale = 1) {
    for (const auto& [k, v] : o.terms) add(k, v * scale);
  }
  friend bool operator==(const LieElement&, const LieElement&) = default;
};

/// Basis index helpers: [0, s) are h_i, s + a is e_a.
inline int basis_size(const StructureConstantTable& t) { return t.rs->semisimple_rank + t.num_roots(); }
inline int h_index(int i) { return i; }
inline int e_index(const StructureConstantTable& t, int root) { return t.rs->semisimple_rank + root; }

/// Bracket of two basis elements.
inline LieElement bracket(const StructureConstantTable& t, int x, int y) {
  const int s = t.rs->semisimple_rank;
  LieElement out;
  if (x < s && y < s) return out;
  auto h_on_e = [&](int i, int root) {
    // <a_i^v, root>
    const RootCoeffs c = t.coeffs(root);
    std::int64_t v = 0;
    for (int j = 0; j < s; ++j) v += static_cast<std::int64_t>(t.rs->cartan[i][j]) * c[j];
    return v;
  };
  if (x < s) {
    out.add(y, h_on_e(x, y - s));
    return out;
  }
  if (y < s) {
    out.add(x, -h_on_e(y, x - s));
    return out;
  }
  const int a = x - s, b = y - s;
  const int ab = t.sum[a][b];
  if (ab == -2) {
    // [e_a, e_{-a}] = h_a
    const int p = a % t.num_positive;
    const auto cv = t.rs->coroot_coefficients(p);
    const std::int64_t sign = t.is_positive(a) ? 1 : -1;
    for (int i = 0; i < s; ++i) out.add(h_index(i), sign * cv[i]);
    return out;
  }
  if (ab >= 0) out.add(e_index(t, ab), t.n[a][b]);
  return out;
}

inline LieElement bracket(const StructureConstantTable& t, int x, const LieElement& y) {
  LieElement out;
  for (const auto& [k, v] : y.terms) out.add(bracket(t, x, k), v);
  return out;
}

struct JacobiReport {
  std::size_t triples_checked = 0;
  std::size_t violations = 0;
  std::vector<std::array<int, 3>> witnesses;  // first few violating basis triples
};

/// Checks the Jacobi identity on every unordered triple of basis elements.
/// Work is split over `threads` workers; the report does not depend on it.
inline JacobiReport verify_jacobi(const StructureConstantTable& t, unsigned threads = 1) {
  const int m = basis_size(t);
  threads = std::max(1u, threads);
  std::vector<JacobiReport> partial(threads);
  auto work = [&](unsigned w) {
    JacobiReport& r = partial[w];
    for (int x = static_cast<int>(w); x < m; x += static_cast<int>(threads)) {
      for (int y = x + 1; y < m; ++y) {
        const LieElement xy = bracket(t, x, y);
        for (int z = y + 1; z < m; ++z) {
          LieElement j = bracket(t, x, bracket(t, y, z));
          j.add(bracket(t, y, bracket(t, z, x)));
          j.add(bracket(t, z, xy));
          ++r.triples_checked;
          if (!j.is_zero()) {
            ++r.violations;
            if (r.witnesses.size() < 8) r.witnesses.push_back({x, y, z});
          }
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  JacobiReport total;
  for (const auto& r : partial) {
    total.triples_checked += r.triples_checked;
    total.violations += r.violations;
    for (const auto& w : r.witnesses) total.witnesses.push_back(w);
  }
  std::sort(total.witnesses.begin(), total.witnesses.end());
  if (total.witnesses.size() > 8) total.witnesses.resize(8);
  return total;
}

}  // namespace sphmod
