#pragma once

// Exact rational polyhedral cones (double description with lineality) and
// affine monoids: membership, Hilbert bases, saturation. Also MonoidSpec,
// the weight monoid together with its lattice, cone, dual cone and the
// primitive extremal ray generators of the dual cone.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sphmod/errors.hpp"
#include "sphmod/exactlin.hpp"
#include "sphmod/integer.hpp"
#include "sphmod/rootsys.hpp"

namespace sphmod {

namespace detail {

struct DDResult {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

inline bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_unique(std::vector<IntVec>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

/// Orthogonal projection of r onto the complement of span(lin), scaled to a
/// primitive integer vector.
inline IntVec reduce_modulo(const IntVec& r, const std::vector<IntVec>& lin) {
  if (lin.empty()) return primitive(r);
  const std::size_t k = lin.size();
  std::vector<IntVec> gram(k, IntVec(k));
  IntVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(lin[i], lin[j]);
    rhs[i] = dot(lin[i], r);
  }
  auto x = express(gram, rhs);  // gram is symmetric, so columns == rows
  RatVec out(r.begin(), r.end());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r.size(); ++j) out[j] -= (*x)[i] * lin[i][j];
  return clear_denominators(out);
}

/// Extreme rays and lineality space of {x in Q^dim : a.x >= 0 for all a}.
inline DDResult double_description(std::size_t dim, std::vector<IntVec> constraints) {
  for (const auto& a : constraints)
    if (a.size() != dim) throw DimensionMismatch("double_description: constraint length mismatch");
  for (auto& a : constraints) a = primitive(a);
  constraints.erase(std::remove_if(constraints.begin(), constraints.end(),
                                   [](const IntVec& a) { return is_zero(a); }),
                    constraints.end());
  sort_unique(constraints);

  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < dim; ++i) lin.push_back(unit(dim, i));
  std::vector<IntVec> rays;
  std::vector<std::vector<bool>> tight;  // tight[r][c]: constraint c is tight on ray r
  std::vector<IntVec> done;

  for (const auto& a : constraints) {
    const std::size_t c = done.size();
    std::size_t l0 = lin.size();
    Int al0 = 0;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      Int v = dot(a, lin[i]);
      if (v != 0) {
        l0 = i;
        al0 = v;
        break;
      }
    }
    if (l0 < lin.size()) {
      IntVec dir = lin[l0];
      if (al0 < 0) {
        dir = -dir;
        al0 = -al0;
      }
      std::vector<IntVec> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == l0) continue;
        next_lin.push_back(primitive(al0 * lin[i] - dot(a, lin[i]) * dir));
      }
      for (std::size_t r = 0; r < rays.size(); ++r) {
        rays[r] = primitive(al0 * rays[r] - dot(a, rays[r]) * dir);
        tight[r].push_back(true);
      }
      rays.push_back(dir);
      std::vector<bool> t(c, true);
      t.push_back(false);
      tight.push_back(std::move(t));
      lin = std::move(next_lin);
    } else {
      std::vector<Int> val(rays.size());
      std::vector<std::size_t> pos, neg;
      std::vector<IntVec> next_rays;
      std::vector<std::vector<bool>> next_tight;
      for (std::size_t r = 0; r < rays.size(); ++r) {
        val[r] = dot(a, rays[r]);
        if (val[r] > 0) pos.push_back(r);
        if (val[r] < 0) neg.push_back(r);
        if (val[r] >= 0) {
          next_rays.push_back(rays[r]);
          auto t = tight[r];
          t.push_back(val[r] == 0);
          next_tight.push_back(std::move(t));
        }
      }
      const long need = static_cast<long>(dim) - static_cast<long>(lin.size()) - 2;
      for (std::size_t p : pos) {
        for (std::size_t n : neg) {
          if (need < 0) continue;
          std::vector<IntVec> active;
          for (std::size_t k = 0; k < c; ++k)
            if (tight[p][k] && tight[n][k]) active.push_back(done[k]);
          if (static_cast<long>(active.size()) < need) continue;
          if (static_cast<long>(rank_of(active)) != need) continue;
          next_rays.push_back(primitive(val[p] * rays[n] - val[n] * rays[p]));
          std::vector<bool> t(c + 1, false);
          for (std::size_t k = 0; k < c; ++k) t[k] = tight[p][k] && tight[n][k];
          t[c] = true;
          next_tight.push_back(std::move(t));
        }
      }
      rays = std::move(next_rays);
      tight = std::move(next_tight);
    }
    done.push_back(a);
  }

  DDResult out;
  out.lineality = hnf(lin);
  for (auto& r : rays) out.rays.push_back(reduce_modulo(r, out.lineality));
  out.rays.erase(std::remove_if(out.rays.begin(), out.rays.end(), [](const IntVec& r) { return is_zero(r); }),
                 out.rays.end());
  sort_unique(out.rays);
  return out;
}

inline std::vector<IntVec> with_negatives(const std::vector<IntVec>& vs) {
  std::vector<IntVec> out(vs);
  for (const auto& v : vs) out.push_back(-v);
  return out;
}

}  // namespace detail

/// Rational polyhedral cone in Q^dim with both representations:
///   V: cone(rays) + span(lineality)
///   H: { x : f.x >= 0 for f in facets, e.x = 0 for e in equations }
/// Rays and facets are primitive integer vectors in lexicographic order.
struct Cone {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
  std::vector<IntVec> facets;
  std::vector<IntVec> equations;

  bool is_pointed() const { return lineality.empty(); }

  bool contains(const IntVec& x) const {
    if (x.size() != dim) throw DimensionMismatch("Cone::contains: length mismatch");
    for (const auto& e : equations)
      if (dot(e, x) != 0) return false;
    for (const auto& f : facets)
      if (dot(f, x) < 0) return false;
    return true;
  }

  /// rays together with +/- lineality basis vectors.
  std::vector<IntVec> generators() const {
    auto g = rays;
    for (const auto& l : lineality) {
      g.push_back(l);
      g.push_back(-l);
    }
    return g;
  }

  static Cone from_generators(std::size_t dim, const std::vector<IntVec>& gens) {
    Cone c;
    c.dim = dim;
    auto dual = detail::double_description(dim, gens);
    c.facets = std::move(dual.rays);
    c.equations = std::move(dual.lineality);
    auto cons = c.facets;
    for (const auto& e : detail::with_negatives(c.equations)) cons.push_back(e);
    auto primal = detail::double_description(dim, cons);
    c.rays = std::move(primal.rays);
    c.lineality = std::move(primal.lineality);
    return c;
  }

  static Cone from_inequalities(std::size_t dim, const std::vector<IntVec>& ineqs,
                                const std::vector<IntVec>& eqs = {}) {
    Cone c;
    c.dim = dim;
    auto cons = ineqs;
    for (const auto& e : detail::with_negatives(eqs)) cons.push_back(e);
    auto primal = detail::double_description(dim, cons);
    c.rays = std::move(primal.rays);
    c.lineality = std::move(primal.lineality);
    auto dual = detail::double_description(dim, c.generators());
    c.facets = std::move(dual.rays);
    c.equations = std::move(dual.lineality);
    return c;
  }

  friend bool operator==(const Cone&, const Cone&) = default;
};

/// { xi : xi.q >= 0 for all q in C }, both representations recomputed.
inline Cone dual_cone(const Cone& c) { return Cone::from_inequalities(c.dim, c.rays, c.lineality); }

/// One representative per extremal ray, primitive relative to `l`, in
/// lexicographic order. The cone must be pointed.
inline std::vector<IntVec> extremal_rays(const Cone& c, const SubLattice& l) {
  if (!c.is_pointed()) throw NonPointedCone("extremal_rays: cone has a nonzero lineality space");
  if (l.ambient != c.dim) throw DimensionMismatch("extremal_rays: lattice dimension mismatch");
  std::vector<IntVec> out;
  for (const auto& r : c.rays) out.push_back(primitive_part(l, r));
  detail::sort_unique(out);
  return out;
}

namespace detail {

inline std::vector<IntVec> nonzero_unique(const std::vector<IntVec>& gens) {
  std::vector<IntVec> out;
  for (const auto& g : gens)
    if (!is_zero(g)) out.push_back(g);
  sort_unique(out);
  return out;
}

/// A functional strictly positive on every nonzero point of a pointed cone.
inline IntVec positive_functional(const Cone& c) {
  IntVec w = zeros(c.dim);
  for (const auto& f : c.facets) w = w + f;
  return w;
}

class MembershipSearch {
 public:
  MembershipSearch(std::vector<IntVec> gens, Cone cone) : gens_(std::move(gens)), cone_(std::move(cone)) {}

  bool operator()(const IntVec& v) {
    if (is_zero(v)) return true;
    if (!cone_.contains(v)) return false;
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    bool found = false;
    for (const auto& g : gens_) {
      if ((*this)(v - g)) {
        found = true;
        break;
      }
    }
    memo_.emplace(v, found);
    return found;
  }

 private:
  std::vector<IntVec> gens_;
  Cone cone_;
  std::map<IntVec, bool> memo_;
};

}  // namespace detail

/// v in Z+E. The cone Q+E must be pointed.
inline bool monoid_membership(const std::vector<IntVec>& e, const IntVec& v) {
  if (is_zero(v)) return true;
  auto gens = detail::nonzero_unique(e);
  if (gens.empty()) return false;
  const std::size_t n = v.size();
  for (const auto& g : gens)
    if (g.size() != n) throw DimensionMismatch("monoid_membership: length mismatch");
  Cone c = Cone::from_generators(n, gens);
  if (!c.is_pointed()) throw NonPointedCone("monoid_membership: cone of generators is not pointed");
  // Subtraction search terminates: the positive functional strictly decreases.
  detail::MembershipSearch search(gens, c);
  return search(v);
}

namespace detail {

inline std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<RatVec> a(n, RatVec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw PreconditionError("rational_inverse: singular matrix");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<RatVec> inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

/// Lattice points of Z^d in the half-open parallelepiped spanned by the rows
/// of a nonsingular integer matrix.
inline std::vector<IntVec> parallelepiped_points(const IntMatrix& b) {
  const std::size_t d = b.size();
  const IntMatrix h = hnf(b);
  const auto binv = rational_inverse(b);
  std::vector<Int> radix(d);
  for (std::size_t i = 0; i < d; ++i) radix[i] = h[i][i];
  std::vector<IntVec> out;
  IntVec x = zeros(d);
  while (true) {
    // Reduce x into the parallelepiped: subtract floor of its coordinates.
    IntVec y(x);
    for (std::size_t j = 0; j < d; ++j) {
      Rational t = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (x[i] != 0) t += x[i] * binv[i][j];
      Int f = floor_div(t);
      if (f != 0) y = y - f * b[j];
    }
    out.push_back(std::move(y));
    std::size_t k = 0;
    while (k < d) {
      x[k] += 1;
      if (x[k] < radix[k]) break;
      x[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  return out;
}

template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Hilbert basis of Z^d cap cone(gens), gens spanning Q^d, cone pointed.
inline std::vector<IntVec> hilbert_basis_full_rank(const std::vector<IntVec>& gens, std::size_t d) {
  Cone c = Cone::from_generators(d, gens);
  if (!c.is_pointed()) throw NonPointedCone("hilbert_basis: cone is not pointed");
  // Simplices on the primitive extremal rays cover the cone, and every lattice
  // point of a simplicial cone is a parallelepiped point plus generators.
  std::vector<IntVec> rays;
  for (const auto& r : c.rays) rays.push_back(primitive(r));
  std::set<IntVec> cand(rays.begin(), rays.end());
  for_each_combination(rays.size(), d, [&](const std::vector<std::size_t>& idx) {
    IntMatrix b;
    for (auto i : idx) b.push_back(rays[i]);
    if (rank_of(b) != d) return;
    for (auto& p : parallelepiped_points(b))
      if (!is_zero(p)) cand.insert(std::move(p));
  });
  const IntVec w = positive_functional(c);
  std::vector<std::pair<Int, IntVec>> by_weight;
  for (const auto& x : cand) by_weight.emplace_back(dot(w, x), x);
  std::sort(by_weight.begin(), by_weight.end());
  // x is reducible iff x - y lies in the cone for an irreducible y of
  // smaller weight, and those are exactly the basis elements found so far.
  std::vector<IntVec> basis;
  std::vector<Int> weights;
  for (const auto& [wx, x] : by_weight) {
    bool reducible = false;
    for (std::size_t k = 0; k < basis.size() && !reducible; ++k)
      reducible = weights[k] < wx && c.contains(x - basis[k]);
    if (!reducible) {
      basis.push_back(x);
      weights.push_back(wx);
    }
  }
  return basis;
}

}  // namespace detail

/// Unique minimal generating set of the monoid ZE cap Q+E, in ambient
/// coordinates and lexicographic order. Q+E must be pointed.
inline std::vector<IntVec> hilbert_basis(const std::vector<IntVec>& e) {
  auto gens = detail::nonzero_unique(e);
  if (gens.empty()) return {};
  const std::size_t n = gens.front().size();
  for (const auto& g : gens)
    if (g.size() != n) throw DimensionMismatch("hilbert_basis: length mismatch");
  const SubLattice l = lattice_from_generators(gens, n);
  std::vector<IntVec> coords;
  for (const auto& g : gens) coords.push_back(*lattice_coordinates(l, g));
  std::vector<IntVec> out;
  for (const auto& h : detail::hilbert_basis_full_rank(coords, l.rank())) out.push_back(from_coordinates(l, h));
  detail::sort_unique(out);
  return out;
}

/// Generators of the saturation ZE cap Q+E (its Hilbert basis).
inline std::vector<IntVec> saturate(const std::vector<IntVec>& e) { return hilbert_basis(e); }

/// Z+E == ZE cap Q+E. Q+E must be pointed.
inline bool is_saturated(const std::vector<IntVec>& e) {
  auto gens = detail::nonzero_unique(e);
  for (const auto& h : hilbert_basis(gens))
    if (!std::binary_search(gens.begin(), gens.end(), h, detail::lex_less) && !monoid_membership(gens, h))
      return false;
  return true;
}

/// The weight monoid Γ = Z+E with derived data. Lattice coordinates are
/// relative to the HNF basis of ZΓ; the dual space Hom(ZΓ, Z) uses the dual
/// basis, so a functional is primitive iff its coordinates have gcd 1.
struct MonoidSpec {
  std::shared_ptr<const RootSystem> rs;
  std::vector<WeightVec> generators;
  SubLattice lattice;
  std::vector<IntVec> generator_coords;
  Cone cone;  // Q+Γ in lattice coordinates
  Cone dual;  // K = (Q+Γ)^v
  std::vector<IntVec> k1;
  std::optional<bool> saturated;  // nullopt when Q+Γ is not pointed

  std::size_t rank() const { return lattice.rank(); }

  std::optional<IntVec> coords(const WeightVec& w) const { return lattice_coordinates(lattice, w); }

  /// Restriction of the simple coroot of index i to ZΓ.
  IntVec iota(int i) const {
    rs->check_index(i);
    return restrict_functional(lattice, unit(lattice.ambient, static_cast<std::size_t>(i)));
  }
};

inline MonoidSpec build_monoid(std::shared_ptr<const RootSystem> rs, std::vector<WeightVec> e) {
  if (!rs) throw InvalidInput("build_monoid: null root system");
  const std::size_t n = rs->dim();
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k].size() != n)
      throw DimensionMismatch("generator " + std::to_string(k) + " has length " + std::to_string(e[k].size()) +
                              ", expected " + std::to_string(n));
    if (!is_dominant(*rs, e[k]))
      throw NotDominant("generator " + std::to_string(k) + " " + to_string(e[k]) + " is not dominant");
  }
  MonoidSpec m;
  m.rs = std::move(rs);
  m.generators = std::move(e);
  m.lattice = lattice_from_generators(m.generators, n);
  for (const auto& g : m.generators) m.generator_coords.push_back(*lattice_coordinates(m.lattice, g));
  m.cone = Cone::from_generators(m.rank(), m.generator_coords);
  m.dual = dual_cone(m.cone);
  m.k1 = m.dual.rays;
  if (m.cone.is_pointed()) m.saturated = is_saturated(m.generators);
  return m;
}

}  // namespace sphmod
