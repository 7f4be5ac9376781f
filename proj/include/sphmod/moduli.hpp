#pragma once

// Consumers of the tangent weights: validation of candidate spherically
// closed root sets, the sigma -> sigma-bar doubling rule, candidate component
// enumeration (an upper bound only, realizability is never decided) and
// canonical fingerprints of (monoid, root set) pairs.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sphmod/cones.hpp"
#include "sphmod/errors.hpp"
#include "sphmod/exactlin.hpp"
#include "sphmod/integer.hpp"
#include "sphmod/rootsys.hpp"
#include "sphmod/sigmabar.hpp"
#include "sphmod/tangent.hpp"

namespace sphmod {

struct SigmaBarReport {
  bool in_phi = true;
  bool linearly_independent = true;
  bool no_proportional_pairs = true;
  bool primitive_in_span = true;
  bool irredundant = true;  // no element in the monoid generated by the others
  std::vector<std::string> failures;

  bool valid() const {
    return in_phi && linearly_independent && no_proportional_pairs && primitive_in_span && irredundant;
  }
};

namespace detail {

inline std::vector<IntVec> coefficient_vectors(const RootSystem& rs, const std::vector<WeightVec>& s) {
  std::vector<IntVec> out;
  for (const auto& w : s) {
    if (w.size() != rs.dim()) throw DimensionMismatch("sigma-bar element " + to_string(w) + " has wrong length");
    auto c = rs.root_coefficients(w);
    if (!c) throw NotInRootLattice(to_string(w) + " is not in the root lattice");
    out.push_back(*c);
  }
  return out;
}

inline bool proportional(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace detail

/// Necessary conditions for s to be the spherically closed roots of a variety
/// with weight monoid Γ. `phi` may be passed to avoid recomputation.
inline SigmaBarReport validate_sigmabar(const MonoidSpec& m, const std::vector<WeightVec>& s,
                                        const PhiResult* phi = nullptr) {
  std::optional<PhiResult> own;
  if (!phi) {
    own = compute_phi(m);
    phi = &*own;
  }
  SigmaBarReport r;
  const auto coeffs = detail::coefficient_vectors(*m.rs, s);
  for (const auto& c : coeffs) {
    const bool found = std::any_of(phi->phi.begin(), phi->phi.end(),
                                   [&](const PhiCertificate& p) { return p.sigma.coeffs == c; });
    if (!found) {
      r.in_phi = false;
      r.failures.push_back(coeff_label(c) + " is not a tangent weight");
    }
  }
  if (rank_of(coeffs) != coeffs.size()) {
    r.linearly_independent = false;
    r.failures.push_back("elements are linearly dependent");
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = i + 1; j < coeffs.size(); ++j)
      if (detail::proportional(coeffs[i], coeffs[j])) {
        r.no_proportional_pairs = false;
        r.failures.push_back(coeff_label(coeffs[i]) + " and " + coeff_label(coeffs[j]) + " are proportional");
      }
  if (!coeffs.empty()) {
    const SubLattice span = lattice_from_generators(coeffs, coeffs.front().size());
    for (const auto& c : coeffs)
      if (primitive_part(span, c) != c) {
        r.primitive_in_span = false;
        r.failures.push_back(coeff_label(c) + " is not primitive in the lattice it spans with the others");
      }
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::vector<IntVec> rest;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (j != i) rest.push_back(coeffs[j]);
    try {
      if (monoid_membership(rest, coeffs[i])) {
        r.irredundant = false;
        r.failures.push_back(coeff_label(coeffs[i]) + " lies in the monoid generated by the others");
      }
    } catch (const NonPointedCone&) {
      r.irredundant = false;
      r.failures.push_back("the others of " + coeff_label(coeffs[i]) + " generate a cone containing a line");
    }
  }
  return r;
}

/// Dimension of the component attached to a valid root set.
inline std::size_t component_dimension(const MonoidSpec& m, const std::vector<WeightVec>& s) {
  const auto r = validate_sigmabar(m, s);
  if (!r.valid()) throw InvalidSigmaBar("invalid sigma-bar set: " + r.failures.front());
  return s.size();
}

enum class LosevCase { None, NotInCatalogue, CorootOnExtremalRay, ShortEndOrthogonal };

inline const char* losev_case_name(LosevCase c) {
  switch (c) {
    case LosevCase::None: return "none";
    case LosevCase::NotInCatalogue: return "not-in-catalogue";
    case LosevCase::CorootOnExtremalRay: return "coroot-on-extremal-ray";
    case LosevCase::ShortEndOrthogonal: return "short-end-orthogonal";
  }
  return "?";
}

struct LosevResult {
  WeightVec value;  // sigma or 2 sigma
  bool doubled = false;
  LosevCase reason = LosevCase::None;
};

/// sigma-bar for a spherical root sigma; sigma must be a nonzero element of
/// Z+Pi that is primitive in ZΓ.
inline LosevResult losev_bar(const MonoidSpec& m, const WeightVec& sigma) {
  const IntVec coeffs = detail::checked_coeffs(*m.rs, sigma);
  if (!m.coords(sigma)) throw NotInLattice(to_string(sigma) + " is not in the lattice of the monoid");
  if (primitive_part(m.lattice, sigma) != sigma)
    throw PreconditionError(to_string(sigma) + " is not primitive in the lattice of the monoid");

  LosevResult r;
  const auto cls = classify_sigma(*m.rs, sigma);
  if (!cls) {
    r.reason = LosevCase::NotInCatalogue;
  } else if (cls->row == 1) {
    const IntVec coroot = m.iota(cls->support[0]);
    for (const auto& ray : m.k1)
      if (is_positive_multiple(coroot, ray)) r.reason = LosevCase::CorootOnExtremalRay;
  } else if (cls->row == 6 && detail::in_set(gamma_perp(m), cls->numbering.back())) {
    r.reason = LosevCase::ShortEndOrthogonal;
  }
  r.doubled = r.reason != LosevCase::None;
  r.value = r.doubled ? Int(2) * sigma : sigma;
  return r;
}

/// Primitive elements of ZΓ on the rays of the given root set.
inline std::vector<WeightVec> sigma_from_sigmabar(const MonoidSpec& m, const std::vector<WeightVec>& s) {
  const auto r = validate_sigmabar(m, s);
  if (!r.valid()) throw InvalidSigmaBar("invalid sigma-bar set: " + r.failures.front());
  std::vector<WeightVec> out;
  for (const auto& x : s) out.push_back(primitive_part(m.lattice, x));
  return out;
}

/// Every subset of the tangent weights passing validate_sigmabar, by size then
/// coefficient order. A superset of the realizable root sets.
inline std::vector<std::vector<WeightVec>> enumerate_candidate_components(const MonoidSpec& m) {
  const PhiResult phi = compute_phi(m);
  const std::size_t n = phi.phi.size();
  if (n > 20) throw PreconditionError("too many tangent weights to enumerate subsets");
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t k = 0; k <= n; ++k)
    detail::for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) { subsets.push_back(idx); });
  std::vector<std::vector<WeightVec>> out;
  for (const auto& idx : subsets) {
    std::vector<WeightVec> s;
    for (auto i : idx) s.push_back(phi.phi[i].sigma.weight);
    if (validate_sigmabar(m, s, &phi).valid()) out.push_back(std::move(s));
  }
  return out;
}

/// Canonical identity of a (monoid, root set) pair.
struct Fingerprint {
  std::string group;                 // canonical Dynkin label
  std::vector<IntVec> monoid_basis;  // Hilbert basis, lexicographic
  std::vector<IntVec> sigma_bar;     // coefficient vectors, sorted

  std::string serialize() const {
    std::ostringstream os;
    os << group << "|";
    for (const auto& v : monoid_basis) os << to_string(v);
    os << "|";
    for (const auto& v : sigma_bar) os << to_string(v);
    return os.str();
  }
};

inline Fingerprint fingerprint(const MonoidSpec& m, const std::vector<WeightVec>& s) {
  const auto r = validate_sigmabar(m, s);
  if (!r.valid()) throw InvalidSigmaBar("invalid sigma-bar set: " + r.failures.front());
  Fingerprint f;
  f.group = label(m.rs->spec);
  f.monoid_basis = hilbert_basis(m.generators);
  f.sigma_bar = detail::coefficient_vectors(*m.rs, s);
  std::sort(f.sigma_bar.begin(), f.sigma_bar.end());
  return f;
}

inline bool fingerprints_equal(const Fingerprint& a, const Fingerprint& b) { return a.serialize() == b.serialize(); }

}  // namespace sphmod
