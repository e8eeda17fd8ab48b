#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tsigma/lemmas.hpp"
#include "tsigma/theorem.hpp"
#include "tsigma/version.hpp"

namespace tsigma {

using Json = nlohmann::ordered_json;

/// Subgroups serialize as sorted element-index arrays plus cycle notation.
inline Json subgroup_to_json(const Subgroup& h) {
  Json j;
  j["order"] = h.order;
  j["members"] = h.members.members();
  std::vector<std::string> cycles;
  h.members.for_each(
      [&](int x) { cycles.push_back(cycle_string(h.parent->elements[x])); });
  j["cycles"] = cycles;
  return j;
}

inline Json witness_to_json(const SigmaWitness& w) {
  Json chain = Json::array();
  for (const Subgroup& s : w.chain) chain.push_back(subgroup_to_json(s));
  Json steps = Json::array();
  for (const WitnessStep& s : w.steps) {
    Json step;
    if (s.normal) {
      step["kind"] = "normal";
    } else {
      step["kind"] = "sigma-primary";
      step["block"] = s.block;
    }
    step["factor"] = s.factor;
    steps.push_back(std::move(step));
  }
  Json j;
  j["chain"] = std::move(chain);
  j["steps"] = std::move(steps);
  return j;
}

inline Json verdict_to_json(const TheoremVerdict& v, bool with_timing = true) {
  Json j;
  j["name"] = v.group_name;
  j["order"] = v.group_order;
  j["degree"] = v.group_degree;
  j["sigma"] = v.sigma_spec;
  j["sigma_soluble"] = v.sigma_soluble;
  j["classical_t_group"] = v.classical_t;
  j["t_sigma"] = v.s1_t_sigma;
  j["r_sigma_all"] = v.s2_r_all;
  j["structure"] = v.s3_structure;
  j["residual_order"] = v.residual_order;
  j["equivalence_ok"] = v.equivalence_ok;

  Json detail;
  if (!v.s1_t_sigma && v.s1_detail.counterexample) {
    detail["t_sigma_counterexample"] = subgroup_to_json(*v.s1_detail.counterexample);
    if (v.s1_detail.counterexample_witness)
      detail["t_sigma_counterexample_witness"] =
          witness_to_json(*v.s1_detail.counterexample_witness);
  }
  Json blocks = Json::array();
  for (const auto& [label, r] : v.s2_blocks) {
    Json b;
    b["block"] = label;
    b["r_sigma"] = r.holds;
    if (!r.holds && r.failure) {
      b["pi"] = r.failure->pi;
      b["hall"] = subgroup_to_json(r.failure->hall);
      b["offender"] = subgroup_to_json(r.failure->offender);
      b["normalizer_order"] = r.failure->hall_normalizer.order;
    }
    blocks.push_back(std::move(b));
  }
  detail["r_sigma_blocks"] = std::move(blocks);

  Json s3;
  s3["i"] = v.s3_detail.i;
  s3["ii"] = v.s3_detail.ii;
  s3["iii"] = v.s3_detail.iii;
  s3["residual_abelian"] = v.s3_detail.d_abelian;
  s3["residual_odd"] = v.s3_detail.d_odd;
  s3["residual_hall"] = v.s3_detail.d_hall;
  s3["dedekind_complement_found"] = v.s3_detail.complement.has_value();
  if (v.s3_detail.complement)
    s3["complement_order"] = v.s3_detail.complement->order;
  Json s3blocks = Json::array();
  for (const Statement3Block& b : v.s3_detail.blocks) {
    Json jb;
    jb["block"] = b.label;
    jb["o_sigma_order"] = b.o_order;
    jb["hall_count"] = b.hall_count;
    jb["o_sigma_contained"] = b.o_contained;
    jb["normal_complements_found"] = b.complements_found;
    s3blocks.push_back(std::move(jb));
  }
  s3["blocks"] = std::move(s3blocks);
  detail["structure"] = std::move(s3);
  j["detail"] = std::move(detail);

  if (with_timing) j["timing_ms"] = v.timing_ms;
  return j;
}

inline Json lemma_report_to_json(const LemmaSuiteReport& rep) {
  Json j;
  j["schema"] = 1;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["sigma"] = rep.sigma_spec;
  Json arr = Json::array();
  for (const LemmaCheck& l : rep.lemmas) {
    Json jl;
    jl["id"] = l.id;
    jl["description"] = l.description;
    jl["checks"] = l.checks;
    jl["failures"] = l.failure_count;
    if (!l.failures.empty()) jl["failure_samples"] = l.failures;
    arr.push_back(std::move(jl));
  }
  j["lemmas"] = std::move(arr);
  j["all_passed"] = rep.all_passed();
  return j;
}

}  // namespace tsigma
