#pragma once

// Exact integer and rational vectors shared by every module.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sphmod/errors.hpp"

namespace sphmod {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;
using IntMatrix = std::vector<IntVec>;

/// Integer vector in the character lattice, in fundamental-weight + torus
/// coordinates: entry i of a weight is its pairing with the i-th simple coroot.
using WeightVec = IntVec;

inline IntVec zeros(std::size_t n) { return IntVec(n, Int(0)); }

inline IntVec unit(std::size_t n, std::size_t i) {
  IntVec v = zeros(n);
  v[i] = 1;
  return v;
}

template <class T>
IntVec to_intvec(const std::vector<T>& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

inline bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: size mismatch");
  IntVec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

inline IntVec operator-(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("sub: size mismatch");
  IntVec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

inline IntVec operator-(const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x = -x;
  return r;
}

inline IntVec operator*(const Int& k, const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x *= k;
  return r;
}

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

inline Int content(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

/// Divides out the content; direction (sign) is preserved. Zero stays zero.
inline IntVec primitive(const IntVec& v) {
  Int g = content(v);
  if (g <= 1) return v;
  IntVec r(v);
  for (auto& x : r) x /= g;
  return r;
}

/// Smallest positive integer multiple of a rational vector (then primitive).
inline IntVec clear_denominators(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, boost::multiprecision::denominator(x));
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(boost::multiprecision::numerator(Rational(x * l)));
  return primitive(r);
}

inline Int floor_div(const Rational& q) {
  Int n = boost::multiprecision::numerator(q);
  Int d = boost::multiprecision::denominator(q);
  Int f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

inline bool fits_int64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

/// True iff a = c*b for some rational c > 0.
inline bool is_positive_multiple(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  return primitive(a) == primitive(b);
}

}  // namespace sphmod
