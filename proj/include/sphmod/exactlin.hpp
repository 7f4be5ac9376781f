#pragma once

// Exact integer linear algebra: row-style Hermite normal form, sublattices of
// Z^n, lattice membership, primitive points on rays, restriction of functionals.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphmod/errors.hpp"
#include "sphmod/integer.hpp"

namespace sphmod {

/// Row-style HNF: rows are an echelon basis of the row lattice, pivots are
/// positive, entries above a pivot lie in [0, pivot). Zero rows are dropped.
inline IntMatrix hnf(IntMatrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m.front().size();
  for (const auto& row : m)
    if (row.size() != cols) throw DimensionMismatch("hnf: ragged matrix");

  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    // Euclid on column c among rows r..end.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
      }
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Int q = m[i][c] / m[r][c];
      if (m[i][c] - q * m[r][c] < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return m;
}

/// A sublattice of Z^n, stored by its HNF basis.
struct SubLattice {
  std::size_t ambient = 0;
  IntMatrix basis;

  std::size_t rank() const { return basis.size(); }

  friend bool operator==(const SubLattice&, const SubLattice&) = default;
};

inline SubLattice lattice_from_generators(const std::vector<IntVec>& gens, std::size_t ambient) {
  for (const auto& g : gens)
    if (g.size() != ambient) throw DimensionMismatch("lattice generator has wrong length");
  return SubLattice{ambient, hnf(gens)};
}

inline SubLattice full_lattice(std::size_t n) {
  IntMatrix id;
  for (std::size_t i = 0; i < n; ++i) id.push_back(unit(n, i));
  return SubLattice{n, id};
}

namespace detail {

inline std::size_t pivot_column(const IntVec& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return j;
  return row.size();
}

}  // namespace detail

/// Coordinates of v in the HNF basis, or nullopt if v is not in the lattice.
inline std::optional<IntVec> lattice_coordinates(const SubLattice& l, const IntVec& v) {
  if (v.size() != l.ambient) throw DimensionMismatch("lattice_coordinates: length mismatch");
  IntVec r(v);
  IntVec c(l.rank());
  for (std::size_t k = 0; k < l.rank(); ++k) {
    const auto& b = l.basis[k];
    const std::size_t p = detail::pivot_column(b);
    for (std::size_t j = 0; j < p; ++j)
      if (r[j] != 0) return std::nullopt;
    if (r[p] % b[p] != 0) return std::nullopt;
    c[k] = r[p] / b[p];
    if (c[k] != 0)
      for (std::size_t j = p; j < r.size(); ++j) r[j] -= c[k] * b[j];
  }
  if (!is_zero(r)) return std::nullopt;
  return c;
}

/// Rational coordinates of v in the lattice basis, or nullopt if v is not in
/// the rational span.
inline std::optional<RatVec> rational_coordinates(const SubLattice& l, const IntVec& v) {
  if (v.size() != l.ambient) throw DimensionMismatch("rational_coordinates: length mismatch");
  RatVec r(v.begin(), v.end());
  RatVec c(l.rank());
  for (std::size_t k = 0; k < l.rank(); ++k) {
    const auto& b = l.basis[k];
    const std::size_t p = detail::pivot_column(b);
    for (std::size_t j = 0; j < p; ++j)
      if (r[j] != 0) return std::nullopt;
    c[k] = r[p] / Rational(b[p]);
    if (c[k] != 0)
      for (std::size_t j = p; j < r.size(); ++j) r[j] -= c[k] * b[j];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  return c;
}

inline bool is_member(const SubLattice& l, const IntVec& v) { return lattice_coordinates(l, v).has_value(); }

inline IntVec from_coordinates(const SubLattice& l, const IntVec& c) {
  if (c.size() != l.rank()) throw DimensionMismatch("from_coordinates: length mismatch");
  IntVec v = zeros(l.ambient);
  for (std::size_t k = 0; k < l.rank(); ++k)
    if (c[k] != 0) v = v + c[k] * l.basis[k];
  return v;
}

/// Shortest nonzero lattice point on the ray Q+ v.
inline IntVec primitive_part(const SubLattice& l, const IntVec& v) {
  if (is_zero(v)) throw PreconditionError("primitive_part: zero vector spans no ray");
  auto c = rational_coordinates(l, v);
  if (!c) throw NotInLattice("primitive_part: ray through " + to_string(v) + " misses the lattice");
  return from_coordinates(l, clear_denominators(*c));
}

/// Values of an integer functional on the lattice basis, i.e. the functional
/// restricted to the lattice, in coordinates dual to the HNF basis.
inline IntVec restrict_functional(const SubLattice& l, const IntVec& f) {
  if (f.size() != l.ambient) throw DimensionMismatch("restrict_functional: length mismatch");
  IntVec out;
  out.reserve(l.rank());
  for (const auto& b : l.basis) out.push_back(dot(f, b));
  return out;
}

/// Rank of a list of integer vectors.
inline std::size_t rank_of(const std::vector<IntVec>& vs) {
  if (vs.empty()) return 0;
  return hnf(vs).size();
}

/// Solves target = sum c_i vs[i] for linearly independent vs; nullopt if
/// target is outside their span.
inline std::optional<RatVec> express(const std::vector<IntVec>& vs, const IntVec& target) {
  const std::size_t k = vs.size();
  const std::size_t n = target.size();
  // Augmented system: columns = vs, rhs = target.
  std::vector<RatVec> a(n, RatVec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (vs[j].size() != n) throw DimensionMismatch("express: length mismatch");
      a[i][j] = vs[j][i];
    }
    a[i][k] = target[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of(k, n);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw PreconditionError("express: vectors are linearly dependent");
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_of[c] = row;
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;
  RatVec c(k);
  for (std::size_t j = 0; j < k; ++j) c[j] = a[pivot_of[j]][k];
  return c;
}

}  // namespace sphmod
