#pragma once

// Subcommands of the sphmod tool. Each takes the parsed input document and
// returns an exit code plus the JSON report; the binary only does file I/O.

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "sphmod/io.hpp"
#include "sphmod/sphmod.hpp"

namespace sphmod::cli {

using io::json;

inline constexpr const char* kToolVersion = "sphmod 1.0.0";

enum ExitCode { kSuccess = 0, kMalformed = 1, kPrecondition = 2 };

struct Outcome {
  int exit_code = kSuccess;
  json report;
};

namespace detail {

inline std::shared_ptr<const RootSystem> root_system_of(const json& input) {
  return std::make_shared<const RootSystem>(build_root_system(io::problem_dynkin(input)));
}

inline MonoidSpec monoid_of(const json& input) {
  if (!input.is_object() || !input.contains("generators")) throw InvalidInput("problem needs \"generators\"");
  auto rs = root_system_of(input);
  return build_monoid(rs, io::decode_vecs(input.at("generators")));
}

inline void require_saturated(const MonoidSpec& m) {
  if (!m.saturated.has_value())
    throw NonPointedCone("the cone of the monoid is not pointed; saturation is undecided");
  if (!*m.saturated) throw NotSaturated("monoid not saturated; run `saturate` for its saturation");
}

inline json group_info(const RootSystem& rs) {
  return {{"group", label(rs.spec)}, {"dynkin", io::encode_dynkin(rs.spec)}, {"notes", rs.notes}};
}

inline json encode_weights(const RootSystem& rs, const std::vector<WeightVec>& ws) {
  json a = json::array();
  for (const auto& w : ws) {
    json e = {{"sigma", io::encode(w)}};
    if (auto c = rs.root_coefficients(w)) {
      e["sigma_coeffs"] = io::encode(*c);
      e["label"] = coeff_label(*c);
    }
    a.push_back(e);
  }
  return a;
}

inline json sigmabar(const json& input, unsigned) {
  auto rs = root_system_of(input);
  json out = group_info(*rs);
  json elems = json::array();
  for (const auto& s : enumerate_sigmabar(*rs)) elems.push_back(io::encode(s));
  out["count"] = elems.size();
  out["elements"] = elems;
  return out;
}

inline json phi(const json& input, unsigned threads) {
  const MonoidSpec m = monoid_of(input);
  require_saturated(m);
  const PhiResult r = compute_phi(m, threads);
  json out = group_info(*m.rs);
  out["saturated"] = true;
  out["dimension"] = r.dimension;
  out["linearly_independent"] = r.linearly_independent;
  out["gamma_perp"] = io::encode_indices(gamma_perp(m));
  out["k1"] = io::encode(m.k1);
  json phi = json::array();
  for (const auto& c : r.phi) phi.push_back(io::encode(c));
  out["phi"] = phi;
  json cands = json::array();
  for (const auto& c : r.candidates) cands.push_back(io::encode(c));
  out["candidates"] = cands;
  return out;
}

inline json saturate(const json& input, unsigned) {
  const MonoidSpec m = monoid_of(input);
  if (!m.saturated.has_value()) throw NonPointedCone("the cone of the monoid is not pointed");
  json out = group_info(*m.rs);
  out["input_saturated"] = *m.saturated;
  out["hilbert_basis"] = io::encode(sphmod::saturate(m.generators));
  out["lattice_basis"] = io::encode(m.lattice.basis);
  return out;
}

inline json losev(const json& input, unsigned) {
  const MonoidSpec m = monoid_of(input);
  const WeightVec sigma = io::decode_root_element(*m.rs, input, "sigma");
  const LosevResult r = losev_bar(m, sigma);
  json out = group_info(*m.rs);
  out["sigma"] = encode_weights(*m.rs, {sigma}).at(0);
  out["sigma_bar"] = encode_weights(*m.rs, {r.value}).at(0);
  out["doubled"] = r.doubled;
  out["case"] = losev_case_name(r.reason);
  return out;
}

inline json chevalley(const json& input, unsigned threads) {
  auto rs = root_system_of(input);
  const StructureConstantTable t = build_constants(rs);
  json out = group_info(*rs);
  json consts = json::array();
  for (int a = 0; a < t.num_positive; ++a)
    for (int b = 0; b < t.num_positive; ++b)
      if (t.sum[a][b] >= 0) {
        const RootCoeffs ca = t.coeffs(a), cb = t.coeffs(b);
        consts.push_back({{"alpha", ca}, {"beta", cb}, {"n", t.n[a][b]}});
      }
  out["positive_constants"] = consts;
  json src = json::array();
  for (auto s : t.sources) src.push_back(s == SignSource::SignTable ? "sign-table" : "extraspecial");
  out["sign_sources"] = src;
  bool check = !input.is_object() || !input.contains("verify_jacobi") || input.at("verify_jacobi").get<bool>();
  if (check) {
    const JacobiReport j = verify_jacobi(t, threads);
    out["jacobi"] = {{"triples_checked", j.triples_checked}, {"violations", j.violations}};
  }
  return out;
}

inline json validate(const json& input, unsigned) {
  const MonoidSpec m = monoid_of(input);
  require_saturated(m);
  const auto s = io::decode_root_elements(*m.rs, input, "sigma_bar");
  const auto r = validate_sigmabar(m, s);
  json out = group_info(*m.rs);
  out["sigma_bar"] = encode_weights(*m.rs, s);
  out["checks"] = {{"in_phi", r.in_phi},
                   {"linearly_independent", r.linearly_independent},
                   {"no_proportional_pairs", r.no_proportional_pairs},
                   {"primitive_in_span", r.primitive_in_span},
                   {"irredundant", r.irredundant}};
  out["valid"] = r.valid();
  out["failures"] = r.failures;
  if (r.valid()) {
    out["component_dimension"] = s.size();
    out["sigma"] = encode_weights(*m.rs, sigma_from_sigmabar(m, s));
  }
  return out;
}

inline json components(const json& input, unsigned) {
  const MonoidSpec m = monoid_of(input);
  require_saturated(m);
  json out = group_info(*m.rs);
  json list = json::array();
  for (const auto& s : enumerate_candidate_components(m))
    list.push_back({{"sigma_bar", encode_weights(*m.rs, s)}, {"dimension", s.size()}});
  out["candidates"] = list;
  out["count"] = list.size();
  out["realizability"] = "unknown";
  return out;
}

inline json fingerprint(const json& input, unsigned) {
  const MonoidSpec m = monoid_of(input);
  require_saturated(m);
  const auto s = io::decode_root_elements(*m.rs, input, "sigma_bar");
  const Fingerprint f = sphmod::fingerprint(m, s);
  return {{"group", f.group},
          {"monoid_basis", io::encode(f.monoid_basis)},
          {"sigma_bar_coeffs", io::encode(f.sigma_bar)},
          {"fingerprint", f.serialize()},
          {"digest", io::fnv1a_hex(f.serialize())}};
}

}  // namespace detail

inline const std::map<std::string, std::function<json(const json&, unsigned)>>& registry() {
  static const std::map<std::string, std::function<json(const json&, unsigned)>> r = {
      {"sigmabar", detail::sigmabar},   {"phi", detail::phi},
      {"saturate", detail::saturate},   {"losev-bar", detail::losev},
      {"chevalley", detail::chevalley}, {"validate", detail::validate},
      {"components", detail::components}, {"fingerprint", detail::fingerprint},
  };
  return r;
}

/// Runs one subcommand. Malformed input gives exit 1, violated preconditions
/// exit 2; in both cases the report carries an "error" object.
inline Outcome run(const std::string& command, const json& input, unsigned threads = 1) {
  Outcome o;
  o.report = {{"command", command}, {"input_hash", io::fnv1a_hex(input.dump())}, {"tool_version", kToolVersion}};
  auto fail = [&](int code, const char* kind, const std::string& what) {
    o.exit_code = code;
    o.report["error"] = {{"kind", kind}, {"message", what}};
  };
  const auto& reg = registry();
  auto it = reg.find(command);
  if (it == reg.end()) {
    fail(kMalformed, "unknown-command", "unknown command: " + command);
    return o;
  }
  try {
    o.report["results"] = it->second(input, threads);
  } catch (const NotSaturated& e) {
    fail(kPrecondition, "not-saturated", e.what());
  } catch (const PreconditionError& e) {
    fail(kPrecondition, "precondition", e.what());
  } catch (const InvalidInput& e) {
    fail(kMalformed, "malformed-input", e.what());
  } catch (const json::exception& e) {
    fail(kMalformed, "malformed-input", e.what());
  }
  return o;
}

/// Byte-stable rendering: sorted keys, two-space indent when pretty.
inline std::string render(const json& report, bool pretty) { return (pretty ? report.dump(2) : report.dump()) + "\n"; }

}  // namespace sphmod::cli
