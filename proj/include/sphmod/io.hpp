#pragma once

// JSON encoding of inputs and reports. Weights are fundamental-weight plus
// torus coordinates (entry i is <a_i^v, lambda> for i below the semisimple
// rank). Simple-root indices in JSON are 1-based. Integers render as JSON
// numbers when they fit in int64 and as decimal strings otherwise.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "sphmod/errors.hpp"
#include "sphmod/integer.hpp"
#include "sphmod/rootsys.hpp"
#include "sphmod/sigmabar.hpp"
#include "sphmod/tangent.hpp"

namespace sphmod::io {

using json = nlohmann::json;

inline json encode(const Int& x) {
  if (fits_int64(x)) return json(static_cast<std::int64_t>(x));
  return json(x.str());
}

inline json encode(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return encode(Int(boost::multiprecision::numerator(q)));
  return json(to_string(q));
}

inline json encode(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

inline json encode(const std::vector<IntVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(encode(v));
  return a;
}

inline json encode_indices(const std::vector<int>& idx) {
  json a = json::array();
  for (int i : idx) a.push_back(i + 1);
  return a;
}

inline Int decode_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw InvalidInput("not an integer: \"" + s + "\"");
    return Int(s);
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

inline IntVec decode_vec(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an integer array, got " + j.dump());
  IntVec v;
  for (const auto& x : j) v.push_back(decode_int(x));
  return v;
}

inline std::vector<IntVec> decode_vecs(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of integer arrays");
  std::vector<IntVec> out;
  for (const auto& x : j) out.push_back(decode_vec(x));
  return out;
}

inline DynkinSpec decode_dynkin(const json& j) {
  if (!j.is_object() || !j.contains("components")) throw InvalidInput("dynkin spec needs a \"components\" array");
  DynkinSpec spec;
  const auto& comps = j.at("components");
  if (!comps.is_array()) throw InvalidInput("\"components\" must be an array");
  for (const auto& c : comps) {
    if (!c.is_object() || !c.contains("type") || !c.contains("rank") || !c.at("type").is_string() ||
        !c.at("rank").is_number_integer())
      throw InvalidInput("component needs string \"type\" and integer \"rank\": " + c.dump());
    const auto t = c.at("type").get<std::string>();
    if (t.size() != 1) throw InvalidInput("component type must be one letter: " + t);
    spec.components.push_back({t[0], c.at("rank").get<int>()});
  }
  if (j.contains("torus_rank")) {
    if (!j.at("torus_rank").is_number_integer() || j.at("torus_rank").get<int>() < 0)
      throw InvalidInput("\"torus_rank\" must be a nonnegative integer");
    spec.torus_rank = j.at("torus_rank").get<int>();
  }
  return spec;
}

inline json encode_dynkin(const DynkinSpec& spec) {
  json comps = json::array();
  for (const auto& c : spec.components) comps.push_back({{"type", std::string(1, c.type)}, {"rank", c.rank}});
  return {{"components", comps}, {"torus_rank", spec.torus_rank}};
}

/// Dynkin spec of a problem file, or of a bare spec object.
inline DynkinSpec problem_dynkin(const json& input) {
  if (input.is_object() && input.contains("dynkin")) return decode_dynkin(input.at("dynkin"));
  return decode_dynkin(input);
}

/// A root-lattice element given either as "<key>" (weight coordinates) or
/// "<key>_coeffs" (simple-root coefficients).
inline WeightVec decode_root_element(const RootSystem& rs, const json& input, const std::string& key) {
  if (input.contains(key + "_coeffs")) {
    const IntVec c = decode_vec(input.at(key + "_coeffs"));
    if (c.size() != static_cast<std::size_t>(rs.semisimple_rank))
      throw DimensionMismatch("\"" + key + "_coeffs\" must have one entry per simple root");
    return rs.weight_of(c);
  }
  if (input.contains(key)) {
    const IntVec w = decode_vec(input.at(key));
    if (w.size() != rs.dim()) throw DimensionMismatch("\"" + key + "\" must have length " + std::to_string(rs.dim()));
    return w;
  }
  throw InvalidInput("missing \"" + key + "\" or \"" + key + "_coeffs\"");
}

inline std::vector<WeightVec> decode_root_elements(const RootSystem& rs, const json& input, const std::string& key) {
  std::vector<WeightVec> out;
  if (input.contains(key + "_coeffs")) {
    for (const auto& c : decode_vecs(input.at(key + "_coeffs"))) {
      if (c.size() != static_cast<std::size_t>(rs.semisimple_rank))
        throw DimensionMismatch("\"" + key + "_coeffs\" entries must have one entry per simple root");
      out.push_back(rs.weight_of(c));
    }
    return out;
  }
  if (input.contains(key)) {
    for (const auto& w : decode_vecs(input.at(key))) {
      if (w.size() != rs.dim()) throw DimensionMismatch("\"" + key + "\" entries must have length " + std::to_string(rs.dim()));
      out.push_back(w);
    }
    return out;
  }
  throw InvalidInput("missing \"" + key + "\" or \"" + key + "_coeffs\"");
}

inline json encode(const SphericalRoot& s) {
  return {{"sigma_coeffs", encode(s.coeffs)}, {"sigma", encode(s.weight)},   {"label", coeff_label(s.coeffs)},
          {"row", s.row},                      {"support", encode_indices(s.support)},
          {"support_type", s.support_type},    {"pi_sigma", encode_indices(s.pi_sigma)}};
}

inline json encode(const PhiCertificate& c) {
  json verdicts = json::object();
  for (std::size_t k = 0; k < c.verdicts.size(); ++k) {
    json v = {{"status", status_name(c.verdicts[k].status)}};
    if (!c.verdicts[k].note.empty()) v["note"] = c.verdicts[k].note;
    verdicts["phi" + std::to_string(k + 1)] = v;
  }
  json out = encode(c.sigma);
  out["verdicts"] = verdicts;
  out["member"] = c.member;
  if (c.phi7) {
    json rays = json::array();
    for (std::size_t i = 0; i < c.phi7->rays.size(); ++i) {
      json r = {{"ray", encode(c.phi7->rays[i])}};
      r["coroot"] = c.phi7->matched[i] < 0 ? json(nullptr) : json(c.phi7->matched[i] + 1);
      rays.push_back(r);
    }
    out["phi7_witness"] = rays;
  }
  if (c.phi8) {
    out["phi8_witness"] = {{"rho1", encode(c.phi8->rho1)},
                           {"rho2", encode(c.phi8->rho2)},
                           {"b1", encode(c.phi8->b1)},
                           {"b2", encode(c.phi8->b2)}};
  }
  return out;
}

/// 64-bit FNV-1a, rendered as 16 hex digits.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sphmod::io
