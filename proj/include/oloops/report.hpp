#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "oloops/group_id.hpp"
#include "oloops/properties.hpp"
#include "oloops/triple_system.hpp"

namespace oloops {

using json = nlohmann::json;

inline constexpr const char* kToolName = "oloops";
inline constexpr const char* kToolVersion = "0.1.0";

namespace report {

inline json flag_to_json(const IdentityFlag& f) {
  json j;
  j["holds"] = f.holds;
  if (f.witness) j["witness"] = {(*f.witness)[0], (*f.witness)[1], (*f.witness)[2]};
  return j;
}

inline json properties_to_json(const PropertyReport& r) {
  json j;
  j["commutative"] = flag_to_json(r.commutative);
  j["associative"] = flag_to_json(r.associative);
  j["flexible"] = flag_to_json(r.flexible);
  j["left_alternative"] = flag_to_json(r.left_alternative);
  j["right_alternative"] = flag_to_json(r.right_alternative);
  j["inverse_property"] = flag_to_json(r.inverse_property);
  j["automorphic_inverse"] = flag_to_json(r.automorphic_inverse);
  j["cross_inverse"] = flag_to_json(r.cross_inverse);
  j["moufang"] = {{"holds", r.moufang()},
                  {"identity1", flag_to_json(r.moufang1)},
                  {"identity2", flag_to_json(r.moufang2)},
                  {"identity3", flag_to_json(r.moufang3)}};
  if (r.loop_exponent)
    j["exponent"] = *r.loop_exponent;
  else
    j["exponent"] = "undefined";
  return j;
}

inline json moufang_theorem_to_json(const MoufangTheoremReport& r) {
  json j;
  j["holds"] = r.holds;
  j["associating_triples"] = r.associating_triples;
  json census = json::object();
  for (const auto& [gid, cnt] : r.subloop_census) census[to_string(gid)] = cnt;
  j["subloop_census"] = census;
  if (r.witness) {
    j["witness"] = {
        {"triple", {r.witness->triple[0], r.witness->triple[1], r.witness->triple[2]}},
        {"subloop", r.witness->subloop},
        {"associativity_failure",
         {r.witness->associativity_failure[0], r.witness->associativity_failure[1],
          r.witness->associativity_failure[2]}}};
  }
  return j;
}

struct DesignAnalysis {
  bool hall = false;
  std::optional<bool> affine;  // only when hall
  std::size_t pasch_count = 0;
  bool clrs = false;
};

inline DesignAnalysis analyze_design(const TripleSystem& S) {
  DesignAnalysis d;
  d.hall = is_hall(S);
  if (d.hall) d.affine = is_affine_hts(S);
  d.pasch_count = find_pasch(S).size();
  d.clrs = clrs_criterion(S);
  return d;
}

inline json design_to_json(const TripleSystem& S, const DesignAnalysis& d) {
  json j;
  j["n"] = S.n();
  j["block_count"] = S.blocks().size();
  j["is_hall"] = d.hall;
  if (d.affine) j["is_affine_hts"] = *d.affine;
  j["pasch_count"] = d.pasch_count;
  j["clrs_criterion"] = d.clrs;
  return j;
}

/// Top-level verification report skeleton; callers attach sections.
inline json make_report(const json& input_descriptor) {
  json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["input"] = input_descriptor;
  return j;
}

}  // namespace report
}  // namespace oloops
