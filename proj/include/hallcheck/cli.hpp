#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hallcheck/formats.hpp"
#include "hallcheck/report.hpp"

namespace hallcheck {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A group argument is either a path to a group file or an inline spec like
// cyclic:12 or product(symmetric:3,cyclic:2).
inline GroupSpec resolve_group_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return parse_group_file(read_file(arg));
  return parse_group_spec(arg);
}

// A sigma argument is a preset name (sylow, paper-example, two-class) or a
// path to a sigma file.
inline SigmaSpec resolve_sigma_arg(const std::string& arg) {
  if (auto preset = sigma_preset(arg)) return *preset;
  if (std::filesystem::exists(arg))
    return SigmaSpec::concrete(parse_sigma_file(read_file(arg)));
  throw config_error("unknown sigma preset and no such file: " + arg);
}

inline void print_verdict_text(std::ostream& out, const Verdict& v) {
  out << "statement " << v.statement_id << "  group " << v.group_label << "  sigma "
      << v.sigma_label << "\n";
  if (v.skipped()) {
    out << "status: skipped (" << *v.skip_reason << ")\n";
    return;
  }
  out << "hypothesis: " << (v.hypothesis_holds ? "holds" : "does not hold") << "\n";
  out << "conclusion: " << (v.conclusion_holds ? "holds" : "does not hold") << "\n";
  out << "status: " << (v.consistent ? "consistent" : "INCONSISTENT") << "\n";
  if (v.witness) out << "witness: " << *v.witness << "\n";
}

inline void print_analyze_text(std::ostream& out, const json& report) {
  const auto& g = report["group"];
  out << "group " << g["label"].get<std::string>() << "  order " << g["order"]
      << "  degree " << g["degree"] << "\n";
  out << "sigma " << report["sigma"]["label"].get<std::string>() << " = "
      << report["sigma"]["text"].get<std::string>() << "\n";
  const auto& c = report["classifiers"];
  auto yn = [](const json& b) { return b.get<bool>() ? "yes" : "no"; };
  out << "soluble " << yn(c["soluble"]) << "  supersoluble " << yn(c["supersoluble"])
      << "  nilpotent " << yn(c["nilpotent"]) << "  cyclic " << yn(c["cyclic"]) << "\n";
  const auto& h = report["hall_sets"];
  out << "complete Hall sigma-sets: " << h["count"] << "  sigma-bases: " << h["bases"]
      << "\n";
  if (!h["first_violation"].is_null()) {
    const auto& v = h["first_violation"];
    out << "first non-permutable pair (set #" << v["set_number"] << "): class "
        << v["class_a"].get<std::string>() << " " << v["subgroup_a"].get<std::string>()
        << "  vs  class " << v["class_b"].get<std::string>() << " "
        << v["subgroup_b"].get<std::string>() << "\n";
  }
  out << "in h_sigma (definition): " << yn(report["h_sigma"]["definitional"]) << "\n";
  out << "in h_sigma (chief-factor criterion): " << yn(report["h_sigma"]["chief_criterion"])
      << "\n";
  out << "chief series:\n";
  for (const auto& f : report["chief_series"]) {
    out << "  #" << f["index"] << "  " << f["below_order"] << " -> " << f["above_order"]
        << "  factor " << f["factor_order"] << "  induced aut order "
        << f["induced_aut_order"];
    if (!f["passes_criterion"].is_null())
      out << (f["passes_criterion"].get<bool>() ? "  [ok]" : "  [fails]");
    out << "\n";
  }
}

}  // namespace detail

/// The command line front end. Returns the process exit code:
/// 0 all consistent, 1 inconsistency found, 2 usage/input error,
/// 3 resource cap hit.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"exhaustive checker for Hall sigma-set permutability statements"};
  app.name("hallcheck");
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  Limits limits;
  app.add_option("--max-degree", limits.max_degree, "cap on permutation degree");
  app.add_option("--max-order", limits.max_order, "cap on group order")
      ->type_name("N");
  app.add_option("--max-subgroups", limits.max_subgroups, "cap on lattice size");
  app.add_option("--max-hall-sets", limits.max_hall_sets,
                 "cap on complete Hall set enumeration");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze one group against one sigma");
  analyze->fallthrough();
  std::string an_group;
  std::string an_sigma = "sylow";
  bool an_json = false;
  analyze->add_option("group", an_group, "group spec or group file")->required();
  analyze->add_option("--sigma", an_sigma, "sigma preset or sigma file");
  analyze->add_flag("--json", an_json, "emit JSON instead of text");

  // verify
  auto* verify = app.add_subcommand("verify", "check one statement on one group");
  verify->fallthrough();
  std::string vf_statement;
  std::string vf_group;
  std::string vf_sigma = "sylow";
  bool vf_json = false;
  bool vf_c11_all = false;
  verify
      ->add_option("--statement", vf_statement,
                   "statement id: A, B, C1.1, C1.2, C1.3 or L2.1")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C1.1", "C1.2", "C1.3", "L2.1"}));
  verify->add_option("group", vf_group, "group spec or group file")->required();
  verify->add_option("--sigma", vf_sigma, "sigma preset or sigma file (A and B only)");
  verify->add_flag("--json", vf_json, "emit the verdict as JSON");
  verify->add_flag("--c11-all-sets", vf_c11_all,
                   "C1.1: quantify over all complete Sylow sets instead of some");

  // catalog run
  auto* catalog = app.add_subcommand("catalog", "operations over the built-in catalog");
  catalog->require_subcommand(1);
  catalog->fallthrough();
  auto* cat_run = catalog->add_subcommand("run", "run every statement over the catalog");
  cat_run->fallthrough();
  std::optional<long> cr_max_order;
  std::vector<std::string> cr_sigmas;
  std::string cr_json_path;
  int cr_jobs = 1;
  bool cr_timings = false;
  bool cr_c11_all = false;
  cat_run->add_option("--max-order", cr_max_order, "only groups up to this order");
  cat_run->add_option("--sigma", cr_sigmas,
                      "sigma presets/files to test (default: sylow, paper-example, two-class)");
  cat_run->add_option("--json", cr_json_path, "write the full JSON report to this path");
  cat_run->add_option("--jobs", cr_jobs, "worker threads")->check(CLI::PositiveNumber);
  cat_run->add_flag("--timings", cr_timings, "include wall-clock timings in the report");
  cat_run->add_flag("--c11-all-sets", cr_c11_all,
                    "C1.1: quantify over all complete Sylow sets instead of some");

  std::vector<std::string> argv_like = args;
  argv_like.insert(argv_like.begin(), "hallcheck");
  std::vector<const char*> argv;
  for (const auto& a : argv_like) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    limits.validate();

    if (analyze->parsed()) {
      GroupSpec spec = detail::resolve_group_arg(an_group);
      Group G = build(spec, limits);
      SigmaPartition sigma = detail::resolve_sigma_arg(an_sigma).resolve(G);
      json report = analyze_report(G, spec.label, sigma);
      if (an_json)
        out << report.dump(2) << "\n";
      else
        detail::print_analyze_text(out, report);
      return 0;
    }

    if (verify->parsed()) {
      GroupSpec spec = detail::resolve_group_arg(vf_group);
      Group G = build(spec, limits);
      Verdict v;
      if (vf_statement == "A" || vf_statement == "B") {
        SigmaPartition sigma = detail::resolve_sigma_arg(vf_sigma).resolve(G);
        v = vf_statement == "A" ? verify_theorem_a(G, sigma, spec.label)
                                : verify_theorem_b(G, sigma, spec.label);
      } else if (vf_statement == "C1.1") {
        v = verify_corollary_1_1(G, spec.label, vf_c11_all);
      } else if (vf_statement == "C1.2") {
        v = verify_corollary_1_2(G, spec.label);
      } else if (vf_statement == "C1.3") {
        v = verify_corollary_1_3(G, spec.label);
      } else {
        v = verify_lemma_2_1_sweep(G, spec.label);
      }
      if (vf_json)
        out << verdict_to_json(v).dump(2) << "\n";
      else
        detail::print_verdict_text(out, v);
      if (!v.consistent) return 1;
      if (v.resource_capped) return 3;
      return 0;
    }

    // catalog run
    RunOptions opts;
    opts.limits = limits;
    opts.max_order = cr_max_order;
    opts.jobs = cr_jobs;
    opts.c11_all_sets = cr_c11_all;
    if (!cr_sigmas.empty()) {
      opts.sigmas.clear();
      for (const auto& s : cr_sigmas) opts.sigmas.push_back(detail::resolve_sigma_arg(s));
    }
    auto results = run_catalog(default_catalog(), opts);
    json report = catalog_report(results, opts, cr_timings);
    if (!cr_json_path.empty()) {
      std::ofstream jf(cr_json_path, std::ios::binary);
      if (!jf) throw config_error("cannot write report to " + cr_json_path);
      jf << report.dump(2) << "\n";
    }

    const auto& summary = report["summary"];
    bool any_capped = false;
    for (const auto& r : results) {
      if (!r.built) {
        out << "BUILD FAILED  " << r.label << ": " << r.build_error << "\n";
        any_capped = true;
        continue;
      }
      for (const auto& v : r.verdicts) {
        if (!v.consistent)
          out << "INCONSISTENT  " << v.statement_id << "  " << v.group_label << "  sigma "
              << v.sigma_label << "  witness: " << v.witness.value_or("-") << "\n";
        else if (v.skipped() && v.resource_capped)
          out << "capped        " << v.statement_id << "  " << v.group_label << ": "
              << *v.skip_reason << "\n";
        if (v.resource_capped) any_capped = true;
      }
    }
    out << "groups: " << summary["groups"] << "  verdicts: " << summary["verdicts"]
        << "  consistent: " << summary["consistent"] << "  inconsistent: "
        << summary["inconsistent"] << "  skipped: " << summary["skipped"] << "\n";
    if (summary["inconsistent"].get<long>() > 0) return 1;
    if (any_capped) return 3;
    return 0;
  } catch (const resource_limit_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hallcheck
