#pragma once

#include <json.hpp>

#include "hallcheck/verify.hpp"

namespace hallcheck {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "hallcheck";
inline constexpr const char* kToolVersion = "1.0.0";

// ordered_json keeps insertion order, which pins the byte layout of reports.
using json = nlohmann::ordered_json;

inline json verdict_to_json(const Verdict& v) {
  json j;
  j["statement"] = v.statement_id;
  j["group"] = v.group_label;
  j["sigma"] = v.sigma_label;
  j["status"] = v.skipped() ? "skipped" : (v.consistent ? "consistent" : "inconsistent");
  if (v.skipped()) {
    j["hypothesis_holds"] = nullptr;
    j["conclusion_holds"] = nullptr;
  } else {
    j["hypothesis_holds"] = v.hypothesis_holds;
    j["conclusion_holds"] = v.conclusion_holds;
  }
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  j["skip_reason"] = v.skip_reason ? json(*v.skip_reason) : json(nullptr);
  j["resource_capped"] = v.resource_capped;
  return j;
}

inline json group_result_to_json(const GroupRunResult& r, bool timings) {
  json j;
  j["label"] = r.label;
  j["built"] = r.built;
  if (r.built) {
    j["order"] = r.order;
    j["degree"] = r.degree;
    j["build_error"] = nullptr;
  } else {
    j["order"] = nullptr;
    j["degree"] = nullptr;
    j["build_error"] = r.build_error;
  }
  // Omitted timings serialize as null so report bytes are run-independent.
  j["timing_ms"] = timings ? json(r.elapsed_ms) : json(nullptr);
  bool capped = !r.built;
  for (const auto& v : r.verdicts) capped = capped || v.resource_capped;
  j["resource_capped"] = capped;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  j["verdicts"] = std::move(verdicts);
  return j;
}

inline json catalog_report(const std::vector<GroupRunResult>& results,
                           const RunOptions& opts, bool timings) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = kToolName;
  j["tool_version"] = kToolVersion;

  json run;
  run["kind"] = "catalog";
  run["max_order"] = opts.max_order ? json(*opts.max_order) : json(nullptr);
  json sigmas = json::array();
  for (const auto& s : opts.sigmas) sigmas.push_back(s.label);
  run["sigmas"] = std::move(sigmas);
  // The worker count is deliberately not recorded: parallelism must never
  // change the report, byte for byte.
  run["c11_all_sets"] = opts.c11_all_sets;
  j["run"] = std::move(run);

  long verdicts = 0, consistent = 0, inconsistent = 0, skipped = 0, capped = 0, built = 0;
  json groups = json::array();
  for (const auto& r : results) {
    groups.push_back(group_result_to_json(r, timings));
    if (r.built) ++built;
    for (const auto& v : r.verdicts) {
      ++verdicts;
      if (v.skipped()) {
        ++skipped;
        if (v.resource_capped) ++capped;
      } else if (v.consistent) {
        ++consistent;
      } else {
        ++inconsistent;
      }
    }
  }
  j["groups"] = std::move(groups);

  json summary;
  summary["groups"] = results.size();
  summary["built"] = built;
  summary["verdicts"] = verdicts;
  summary["consistent"] = consistent;
  summary["inconsistent"] = inconsistent;
  summary["skipped"] = skipped;
  summary["resource_capped"] = capped;
  j["summary"] = std::move(summary);
  return j;
}

/// Everything the `analyze` subcommand reports for one (group, sigma) pair:
/// classifier flags, Hall set statistics, class membership both ways, and
/// the chief series with induced automorphism data.
inline json analyze_report(const Group& G, const std::string& group_label,
                           const SigmaPartition& sigma) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = kToolName;
  j["tool_version"] = kToolVersion;

  json jg;
  jg["label"] = group_label;
  jg["order"] = G.order();
  jg["degree"] = G.degree();
  json primes = json::array();
  for (long p : G.primes()) primes.push_back(p);
  jg["primes"] = std::move(primes);
  j["group"] = std::move(jg);

  json js;
  js["label"] = sigma.label();
  js["text"] = sigma.canonical_text();
  json classes = json::array();
  for (size_t i = 0; i < sigma.explicit_class_count(); ++i)
    classes.push_back(sigma.class_name(i));
  js["classes"] = std::move(classes);
  js["has_rest"] = sigma.has_rest();
  j["sigma"] = std::move(js);

  json cls;
  cls["soluble"] = is_soluble(G);
  cls["supersoluble"] = is_supersoluble(G);
  cls["nilpotent"] = is_nilpotent(G);
  cls["cyclic"] = is_cyclic(G);
  j["classifiers"] = std::move(cls);

  auto def = in_h_sigma_definitional_analysis(G, sigma);
  json jh;
  jh["count"] = def.set_count;
  jh["bases"] = def.basis_count;
  if (def.violation) {
    json v;
    v["set_number"] = def.violation->set_number;
    v["class_a"] = sigma.class_name(def.violation->class_a);
    v["class_b"] = sigma.class_name(def.violation->class_b);
    v["subgroup_a"] = describe_subgroup(def.violation->subgroup_a);
    v["subgroup_b"] = describe_subgroup(def.violation->subgroup_b);
    jh["first_violation"] = std::move(v);
  } else {
    jh["first_violation"] = nullptr;
  }
  j["hall_sets"] = std::move(jh);

  auto chief = in_h_sigma_chief_criterion_analysis(G, sigma);
  json jm;
  jm["definitional"] = def.in_class;
  jm["chief_criterion"] = chief.soluble && chief.in_class;
  jm["agree"] = def.in_class == (chief.soluble && chief.in_class);
  j["h_sigma"] = std::move(jm);

  json factors = json::array();
  const auto& series = chief_series(G);
  for (size_t i = 0; i < series.factors.size(); ++i) {
    const auto& f = series.factors[i];
    json jf;
    jf["index"] = i + 1;
    jf["below_order"] = f.below.order();
    jf["above_order"] = f.above.order();
    jf["factor_order"] = f.order;
    long p = prime_power_base(f.order);
    jf["prime"] = p ? json(p) : json(nullptr);
    jf["centralizer_order"] = f.centralizer_order;
    jf["induced_aut_order"] = f.induced_aut_order;
    json ap = json::array();
    for (long q : prime_divisors(f.induced_aut_order)) ap.push_back(q);
    jf["induced_aut_primes"] = std::move(ap);
    if (chief.soluble && i < chief.checks.size())
      jf["passes_criterion"] = chief.checks[i].passes;
    else
      jf["passes_criterion"] = nullptr;
    factors.push_back(std::move(jf));
  }
  j["chief_series"] = std::move(factors);
  return j;
}

}  // namespace hallcheck
