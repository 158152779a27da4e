#pragma once

/* JSON rendering of reports and audit verdicts. Field order is fixed
   (ordered_json) so output is byte-stable across runs and thread counts. */

#include <string>

#include <nlohmann/json.hpp>

#include "invariants.hpp"

namespace twistkit {

using ordered_json = nlohmann::ordered_json;

inline ordered_json report_json(const InvariantReport& r) {
  ordered_json j;
  j["k"] = r.k;
  j["rep"] = r.rep_id;
  j["delta0"] = r.delta0.render();
  j["delta1"] = r.delta1.render();
  j["torsion_delta"] = r.torsion_delta.render();
  j["rank"] = r.rank;
  if (r.tau) {
    j["tau"] = ordered_json{{"num", r.tau->num.render()},
                            {"den", r.tau->den.render()},
                            {"integral", r.tau->integral}};
  }
  j["deg0"] = r.deg0;
  if (r.deg1) j["deg1"] = *r.deg1;
  if (r.norm_lower_bound) j["norm_lower_bound"] = rat_to_string(*r.norm_lower_bound);
  ordered_json audits;
  auto put = [&](const char* name, bool pass, const std::string& witness) {
    ordered_json a;
    a["verdict"] = pass ? "PASS" : "FAIL";
    if (!pass) a["witness"] = witness;
    audits[name] = a;
  };
  put("h0_torsion", r.h0_torsion, "delta0 = " + r.delta0.render());
  put("h0_degree_bound", r.h0_degree_bound,
      "deg0 = " + std::to_string(r.deg0) + " > k = " + std::to_string(r.k));
  put("delta1_matches_rank", r.delta1_matches_rank,
      "delta1 = " + r.delta1.render() + " vs rank " + std::to_string(r.rank));
  j["audits"] = audits;
  return j;
}

inline ordered_json verdict_json(const AuditVerdict& v) {
  ordered_json j;
  j["verdict"] = v.pass ? "PASS" : "FAIL";
  j["scope"] = v.scope;
  j["family_size"] = v.family_size;
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

inline ordered_json verdict_json(const SplitVerdict& v) {
  ordered_json j;
  j["verdict"] = v.pass ? "PASS" : "FAIL";
  j["scope"] = v.scope;
  j["family_size"] = v.family_size;
  j["attained"] = v.attained;
  if (!v.attained_by.empty()) j["attained_by"] = v.attained_by;
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

inline ordered_json search_json(const VanishingSearch& s) {
  ordered_json j;
  j["found"] = s.found;
  if (s.found) j["witness"] = s.witness_id;
  j["message"] = s.message;
  j["family_size"] = s.family_size;
  return j;
}

}  // namespace twistkit
