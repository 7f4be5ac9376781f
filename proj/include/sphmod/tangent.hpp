#pragma once

// Membership test for the weights of the tangent space at the most degenerate
// point of the moduli scheme of a weight monoid Γ. Conditions are numbered
// 1..8; each certificate records a verdict per condition plus witnesses for
// the two cone conditions.

#include <array>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sphmod/cones.hpp"
#include "sphmod/errors.hpp"
#include "sphmod/exactlin.hpp"
#include "sphmod/integer.hpp"
#include "sphmod/rootsys.hpp"
#include "sphmod/sigmabar.hpp"

namespace sphmod {

enum class Status { Pass, Fail, NotApplicable, Skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "n/a";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

struct Verdict {
  Status status = Status::Skipped;
  std::string note;
};

/// Per positively pairing extremal ray of K: the simple root whose restricted
/// coroot lies on it, or -1.
struct Phi7Witness {
  std::vector<IntVec> rays;
  std::vector<int> matched;
};

/// iota(alpha^v) = b1 * rho1 + b2 * rho2, both rho in K and in the lattice dual to ZΓ.
struct Phi8Witness {
  IntVec rho1;
  IntVec rho2;
  Rational b1;
  Rational b2;
};

struct PhiCertificate {
  SphericalRoot sigma;
  std::array<Verdict, 8> verdicts;  // index k holds condition k+1
  std::optional<Phi7Witness> phi7;
  std::optional<Phi8Witness> phi8;
  bool member = false;
};

/// Simple roots whose coroot vanishes on every generator.
inline std::vector<int> gamma_perp(const MonoidSpec& m) {
  std::vector<int> out;
  for (int i = 0; i < m.rs->semisimple_rank; ++i) {
    bool zero = true;
    for (const auto& g : m.generators) zero = zero && g[i] == 0;
    if (zero) out.push_back(i);
  }
  return out;
}

/// Coordinates of sigma in ZΓ; throws NotInLattice when sigma is outside.
inline IntVec lattice_coords_or_throw(const MonoidSpec& m, const WeightVec& sigma) {
  auto c = m.coords(sigma);
  if (!c) throw NotInLattice(to_string(sigma) + " is not in the lattice generated by the monoid");
  return *c;
}

/// Primitive extremal rays of K pairing positively with sigma.
inline std::vector<IntVec> k1_sigma(const MonoidSpec& m, const WeightVec& sigma) {
  const IntVec c = lattice_coords_or_throw(m, sigma);
  std::vector<IntVec> out;
  for (const auto& r : m.k1)
    if (dot(r, c) > 0) out.push_back(r);
  return out;
}

namespace detail {

inline void require_saturated(const MonoidSpec& m) {
  if (!m.saturated.has_value())
    throw NonPointedCone("the cone of the monoid is not pointed; saturation is undecided");
  if (!*m.saturated) throw NotSaturated("the monoid is not saturated (see is_saturated)");
}

inline bool in_set(const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

inline Verdict pass(std::string note = {}) { return {Status::Pass, std::move(note)}; }
inline Verdict fail(std::string note) { return {Status::Fail, std::move(note)}; }
inline Verdict not_applicable() { return {Status::NotApplicable, {}}; }

/// Ceiling of a rational.
inline Int ceil_div(const Rational& q) { return -floor_div(-q); }

}  // namespace detail

/// Conditions 1..6 on the generator list. Entries 7 and 8 stay Skipped.
inline PhiCertificate check_phi_1_to_6(const MonoidSpec& m, const SphericalRoot& s) {
  detail::require_saturated(m);
  PhiCertificate cert;
  cert.sigma = s;
  auto& v = cert.verdicts;
  const auto perp = gamma_perp(m);

  v[0] = m.coords(s.weight) ? detail::pass() : detail::fail("sigma is not in the lattice of the monoid");

  v[1] = classify_sigma(*m.rs, s.weight) ? detail::pass() : detail::fail("sigma is not in the catalogue");

  std::string missing;
  for (int g : s.pi_sigma)
    if (!detail::in_set(perp, g)) missing += (missing.empty() ? "a" : ",a") + std::to_string(g + 1);
  v[2] = missing.empty() ? detail::pass() : detail::fail("Pi_sigma not orthogonal to the monoid: " + missing);

  if (s.row == 6) {
    const int last = s.numbering.back();
    v[3] = detail::in_set(perp, last) ? detail::fail("a" + std::to_string(last + 1) + " is orthogonal to the monoid")
                                      : detail::pass();
  } else {
    v[3] = detail::not_applicable();
  }

  if (s.row == 3) {
    const int a = s.support[0], b = s.support[1];
    v[4] = detail::pass();
    for (const auto& g : m.generators)
      if (g[a] != g[b]) {
        v[4] = detail::fail("generator " + to_string(g) + " separates a" + std::to_string(a + 1) + " and a" +
                            std::to_string(b + 1));
        break;
      }
  } else {
    v[4] = detail::not_applicable();
  }

  if (s.row == 2) {
    const int a = s.support[0];
    v[5] = detail::pass();
    for (const auto& g : m.generators)
      if (g[a] % 2 != 0) {
        v[5] = detail::fail("generator " + to_string(g) + " pairs oddly with a" + std::to_string(a + 1));
        break;
      }
  } else {
    v[5] = detail::not_applicable();
  }
  return cert;
}

/// Condition 7 for sigma not a simple root: every extremal ray of K pairing
/// positively with sigma carries iota(d^v) for some simple d not orthogonal to Γ.
inline std::pair<Verdict, Phi7Witness> check_phi7(const MonoidSpec& m, const SphericalRoot& s) {
  if (s.row == 1) throw PreconditionError("condition 7 applies only to sigma outside the simple roots");
  Phi7Witness w;
  w.rays = k1_sigma(m, s.weight);
  const auto perp = gamma_perp(m);
  std::vector<IntVec> coroots(m.rs->semisimple_rank);
  for (int d = 0; d < m.rs->semisimple_rank; ++d)
    if (!detail::in_set(perp, d)) coroots[d] = m.iota(d);
  Verdict v = detail::pass();
  for (const auto& r : w.rays) {
    int hit = -1;
    for (int d = 0; d < m.rs->semisimple_rank && hit < 0; ++d)
      if (!detail::in_set(perp, d) && is_positive_multiple(coroots[d], r)) hit = d;
    w.matched.push_back(hit);
    if (hit < 0 && v.status == Status::Pass) v = detail::fail("extremal ray " + to_string(r) + " carries no coroot");
  }
  return {v, w};
}

/// Condition 8 for sigma = alpha simple.
inline std::pair<Verdict, std::optional<Phi8Witness>> check_phi8(const MonoidSpec& m, const SphericalRoot& s) {
  if (s.row != 1) throw PreconditionError("condition 8 applies only to simple roots");
  detail::require_saturated(m);
  const int a = s.support[0];
  const IntVec alpha = lattice_coords_or_throw(m, s.weight);
  const IntVec coroot = m.iota(a);
  const auto rays = k1_sigma(m, s.weight);

  if (rays.empty()) return {detail::fail("no extremal ray of K pairs positively with alpha"), std::nullopt};
  if (rays.size() > 2)
    return {detail::fail(std::to_string(rays.size()) + " extremal rays pair positively with alpha"), std::nullopt};

  if (rays.size() == 2) {
    for (const auto& r : rays)
      if (dot(r, alpha) != 1) return {detail::fail("extremal ray " + to_string(r) + " pairs to " +
                                                   dot(r, alpha).str() + " with alpha"),
                                      std::nullopt};
    auto b = express(rays, coroot);
    if (!b || (*b)[0] <= 0 || (*b)[1] <= 0)
      return {detail::fail("the coroot is not a strictly positive combination of the two rays"), std::nullopt};
    return {detail::pass("two rays"), Phi8Witness{rays[0], rays[1], (*b)[0], (*b)[1]}};
  }

  const IntVec& rho0 = rays[0];
  if (dot(rho0, alpha) != 1)
    return {detail::fail("the extremal ray pairs to " + dot(rho0, alpha).str() + " with alpha"), std::nullopt};
  const IntVec d = coroot - Int(2) * rho0;
  if (is_zero(d)) return {detail::fail("the coroot is twice the extremal ray"), std::nullopt};

  // {t : rho0 + t d in K} = [lo, hi]; lattice points need t in (1/g)Z.
  std::optional<Rational> lo, hi;
  for (const auto& f : m.dual.facets) {
    const Int fd = dot(f, d);
    if (fd == 0) continue;
    const Rational bound = Rational(-dot(f, rho0)) / Rational(fd);
    if (fd > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
  }
  const Int g = content(d);
  auto admissible = [&](const Rational& t) { return (!lo || t >= *lo) && (!hi || t <= *hi); };
  Rational t;
  if (admissible(Rational(1))) {
    t = 1;
  } else {
    Int k = g / 2 + 1;
    if (lo) k = std::max(k, detail::ceil_div(*lo * Rational(g)));
    t = Rational(k, g);
    if (!admissible(t)) return {detail::fail("no lattice point of K on the admissible line beyond t = 1/2"), std::nullopt};
  }
  IntVec rho2 = rho0;
  for (std::size_t i = 0; i < rho2.size(); ++i) {
    const Rational x = Rational(rho0[i]) + t * Rational(d[i]);
    rho2[i] = numerator(x);
  }
  const Rational b2 = 1 / t;
  return {detail::pass("one ray"), Phi8Witness{rho0, rho2, 2 - b2, b2}};
}

/// Full certificate; member iff every applicable condition passes.
inline PhiCertificate certify(const MonoidSpec& m, const SphericalRoot& s) {
  PhiCertificate cert = check_phi_1_to_6(m, s);
  auto& v = cert.verdicts;
  if (v[0].status != Status::Pass) {
    v[6].status = v[7].status = Status::Skipped;
  } else if (s.row == 1) {
    v[6] = detail::not_applicable();
    auto [verdict, witness] = check_phi8(m, s);
    v[7] = verdict;
    cert.phi8 = witness;
  } else {
    auto [verdict, witness] = check_phi7(m, s);
    v[6] = verdict;
    cert.phi7 = witness;
    v[7] = detail::not_applicable();
  }
  cert.member = true;
  for (const auto& x : v)
    if (x.status == Status::Fail || x.status == Status::Skipped) cert.member = false;
  return cert;
}

struct PhiResult {
  std::vector<PhiCertificate> phi;         // members, sorted by coefficient vector
  std::vector<PhiCertificate> candidates;  // every catalogue element in ZΓ, same order
  std::size_t dimension = 0;
  bool linearly_independent = true;
};

/// Weights of the tangent space. Candidates are the catalogue elements lying
/// in ZΓ; `threads` > 1 splits them across workers.
inline PhiResult compute_phi(const MonoidSpec& m, unsigned threads = 1) {
  detail::require_saturated(m);
  std::vector<SphericalRoot> pool;
  for (auto& s : enumerate_sigmabar(*m.rs))
    if (m.coords(s.weight)) pool.push_back(std::move(s));
  std::sort(pool.begin(), pool.end(), [](const SphericalRoot& a, const SphericalRoot& b) { return a.coeffs < b.coeffs; });

  std::vector<PhiCertificate> certs(pool.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pool.size())));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < pool.size(); i += threads) certs[i] = certify(m, pool[i]);
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool_threads;
    for (unsigned w = 0; w < threads; ++w) pool_threads.emplace_back(work, w);
    for (auto& th : pool_threads) th.join();
  }

  PhiResult r;
  r.candidates = certs;
  std::vector<IntVec> coeffs;
  for (auto& c : certs)
    if (c.member) {
      coeffs.push_back(c.sigma.coeffs);
      r.phi.push_back(c);
    }
  r.dimension = r.phi.size();
  r.linearly_independent = rank_of(coeffs) == coeffs.size();
  return r;
}

}  // namespace sphmod
