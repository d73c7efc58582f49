// Acceptance gate: eight end-to-end checks over the whole stack, from the
// permutation engine up to the installed CLI binary. Each criterion prints
// exactly one [PASS]/[FAIL] line; the process exits nonzero if any fail.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hallcheck/hallcheck.hpp"

#ifdef _WIN32
#error "the acceptance runner relies on POSIX std::system exit codes"
#endif
#include <sys/wait.h>

using namespace hallcheck;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }
Outcome pass(std::string what) { return {true, std::move(what)}; }

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(std::min(hw, 8u));
}

// ---------------------------------------------------------------------------
// Criterion 1: statement B, the equivalence between the Hall-basis definition
// of the class and the chief-factor test, over every soluble catalog group of
// order at most 200 under all three sigma presets.
Outcome criterion_equivalence(const std::vector<GroupRunResult>& results) {
  long groups = 0, checks = 0;
  std::set<std::string> soluble_labels;
  for (const auto& r : results) {
    if (!r.built || r.order > 200) continue;
    for (const auto& v : r.verdicts) {
      if (v.statement_id != "B") continue;
      if (v.skipped()) {
        if (v.resource_capped)
          return fail("B capped on " + r.label + ": " + *v.skip_reason);
        continue;  // insoluble groups are outside the statement
      }
      soluble_labels.insert(r.label);
      ++checks;
      if (!v.consistent)
        return fail("B inconsistent on " + r.label + " sigma " + v.sigma_label +
                    ": " + v.witness.value_or("(no witness)"));
    }
  }
  groups = static_cast<long>(soluble_labels.size());
  if (groups < 100 || checks != groups * 3)
    return fail("unexpected coverage: " + std::to_string(groups) + " groups, " +
                std::to_string(checks) + " checks");
  return pass(std::to_string(groups) + " soluble groups of order <= 200, " +
              std::to_string(checks) + " definitional/chief comparisons, 0 mismatches");
}

// ---------------------------------------------------------------------------
// Criterion 2: the order-42 metacyclic group is in the class for the
// paper-example partition but falls out of it for the sylow partition, with a
// concrete non-permutable Sylow pair as the witness.
Outcome criterion_flagship_group(const Limits& limits) {
  Group g = build(parse_group_spec("metacyclic:7:6"), limits);
  if (g.order() != 42) return fail("expected order 42, got " + std::to_string(g.order()));

  SigmaPartition sp = sigma_preset("paper-example")->resolve(g);
  auto def_in = in_h_sigma_definitional_analysis(g, sp);
  auto chief_in = in_h_sigma_chief_criterion_analysis(g, sp);
  if (!def_in.in_class || def_in.set_count != 7 || def_in.basis_count != 7)
    return fail("paper-example: expected membership with 7/7 basis sets, got " +
                std::to_string(def_in.basis_count) + "/" + std::to_string(def_in.set_count));
  if (!chief_in.in_class) return fail("paper-example: chief-factor test disagrees");

  SigmaPartition ss = sigma_preset("sylow")->resolve(g);
  auto def_out = in_h_sigma_definitional_analysis(g, ss);
  auto chief_out = in_h_sigma_chief_criterion_analysis(g, ss);
  if (def_out.in_class || !def_out.violation)
    return fail("sylow: expected a sigma-basis violation, found none");
  if (def_out.set_count != 49 || def_out.basis_count != 7)
    return fail("sylow: expected 7/49 basis sets, got " +
                std::to_string(def_out.basis_count) + "/" +
                std::to_string(def_out.set_count));
  const auto& bv = *def_out.violation;
  std::set<long> witness_orders{bv.subgroup_a.order(), bv.subgroup_b.order()};
  if (witness_orders != std::set<long>{2, 3})
    return fail("sylow: witness pair has unexpected orders");
  if (permutable(bv.subgroup_a, bv.subgroup_b))
    return fail("sylow: witness pair actually permutes");
  if (chief_out.in_class || !chief_out.first_failure)
    return fail("sylow: chief-factor test disagrees");
  if (chief_out.checks[*chief_out.first_failure].factor_order != 7)
    return fail("sylow: wrong chief factor blamed");

  return pass("metacyclic:7:6 in class under paper-example (7/7 bases); out under sylow "
              "(7/49, non-permutable Sylow pair of orders 2 and 3, chief factor 7 fails)");
}

// ---------------------------------------------------------------------------
// Criterion 3: statements A, C1.1 and C1.2 report zero inconsistencies over
// the full catalog.
Outcome criterion_sufficiency(const std::vector<GroupRunResult>& results) {
  std::map<std::string, long> counts;
  for (const auto& r : results) {
    if (!r.built) return fail(r.label + " failed to build: " + r.build_error);
    for (const auto& v : r.verdicts) {
      if (v.statement_id != "A" && v.statement_id != "C1.1" && v.statement_id != "C1.2")
        continue;
      if (v.skipped())
        return fail(v.statement_id + " skipped on " + r.label + ": " + *v.skip_reason);
      ++counts[v.statement_id];
      if (!v.consistent)
        return fail(v.statement_id + " inconsistent on " + r.label + ": " +
                    v.witness.value_or("(no witness)"));
    }
  }
  long n = static_cast<long>(results.size());
  if (counts["A"] != 3 * n || counts["C1.1"] != n || counts["C1.2"] != n)
    return fail("unexpected verdict counts over " + std::to_string(n) + " groups");
  return pass("A x" + std::to_string(counts["A"]) + ", C1.1 x" +
              std::to_string(counts["C1.1"]) + ", C1.2 x" +
              std::to_string(counts["C1.2"]) + " across " + std::to_string(n) +
              " groups, 0 inconsistencies");
}

// ---------------------------------------------------------------------------
// Criterion 4: statement C1.3 agrees between its two independent encodings
// (Hall-basis definition at the sylow partition vs the chief-factor bound)
// on every soluble catalog group, and skips exactly the insoluble ones.
Outcome criterion_double_encoding(const std::vector<GroupRunResult>& results) {
  long checked = 0, skipped = 0;
  for (const auto& r : results) {
    for (const auto& v : r.verdicts) {
      if (v.statement_id != "C1.3") continue;
      if (v.skipped()) {
        if (v.skip_reason->find("not applicable") == std::string::npos)
          return fail("unexpected C1.3 skip on " + r.label + ": " + *v.skip_reason);
        ++skipped;
        continue;
      }
      ++checked;
      if (!v.consistent)
        return fail("C1.3 encodings disagree on " + r.label + ": " +
                    v.witness.value_or("(no witness)"));
    }
  }
  if (checked < 100 || skipped == 0)
    return fail("unexpected coverage: " + std::to_string(checked) + " checked, " +
                std::to_string(skipped) + " skipped");
  return pass("both encodings agree on " + std::to_string(checked) +
              " soluble groups (" + std::to_string(skipped) + " insoluble skipped)");
}

// ---------------------------------------------------------------------------
// Criterion 5: the statement L2.1 triple sweep finds no violation on any
// catalog group of order at most 100, exhaustively for small lattices and by
// deterministic sampling for large ones.
Outcome criterion_triple_sweep(const std::vector<GroupRunResult>& results,
                               const Limits& limits) {
  for (const auto& r : results) {
    for (const auto& v : r.verdicts) {
      if (v.statement_id != "L2.1") continue;
      if (r.order <= 100) {
        if (v.skipped()) return fail("L2.1 skipped on " + r.label + ": " + *v.skip_reason);
        if (!v.consistent)
          return fail("L2.1 violated on " + r.label + ": " +
                      v.witness.value_or("(no witness)"));
      } else if (!v.skipped() || v.skip_reason->rfind("not sampled", 0) != 0) {
        return fail("L2.1 should be marked unsampled on " + r.label);
      }
    }
  }

  long groups = 0, triples = 0, exhaustive = 0, sampled = 0;
  for (const auto& spec : default_catalog()) {
    auto expect = predicted_order(spec);
    if (!expect || *expect > 100) continue;
    Group g = build(spec, limits);
    LemmaSweepStats stats;
    Verdict v = verify_lemma_2_1_sweep(g, to_string(spec), {}, &stats);
    if (v.skipped() || !v.consistent || stats.violations != 0)
      return fail("sweep failed on " + to_string(spec));
    ++groups;
    triples += stats.triples_checked;
    (stats.exhaustive ? exhaustive : sampled) += 1;
  }
  if (groups < 100 || triples < 10000)
    return fail("unexpected coverage: " + std::to_string(groups) + " groups, " +
                std::to_string(triples) + " triples");
  return pass(std::to_string(groups) + " groups of order <= 100, " +
              std::to_string(triples) + " permutable triples (" +
              std::to_string(exhaustive) + " exhaustive, " + std::to_string(sampled) +
              " sampled), 0 violations");
}

// ---------------------------------------------------------------------------
// Criterion 6: engine oracles. The subgroup lattice matches an independent
// brute-force enumeration, Sylow subgroups match the lattice filter with
// counts congruent to 1 mod p, and the chief-series invariant is stable
// across ten tie-breaking seeds.
std::set<std::vector<std::uint16_t>> brute_force_subgroups(const Group& G) {
  std::set<std::vector<std::uint16_t>> found;
  long n = G.order();
  auto add = [&](std::vector<std::uint16_t> gens) {
    found.insert(detail::closure_by_generators(G, gens).indices());
  };
  add({});
  for (long a = 0; a < n; ++a) {
    add({static_cast<std::uint16_t>(a)});
    for (long b = a + 1; b < n; ++b) {
      add({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)});
      for (long c = b + 1; c < n; ++c)
        add({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
             static_cast<std::uint16_t>(c)});
    }
  }
  return found;
}

Outcome criterion_engine_oracles(const Limits& limits) {
  // Lattice vs brute force (every subgroup here needs at most 3 generators).
  long lattice_entries = 0;
  for (const char* text : {"symmetric:4", "alternating:4", "dihedral:6",
                           "metacyclic:7:3", "product(symmetric:3,cyclic:4)"}) {
    Group g = build(parse_group_spec(text), limits);
    auto oracle = brute_force_subgroups(g);
    const auto& lat = all_subgroups(g);
    std::set<std::vector<std::uint16_t>> got;
    for (size_t i = 0; i < lat.size(); ++i) got.insert(lat[i].indices());
    if (got != oracle)
      return fail(std::string("lattice mismatch on ") + text + ": " +
                  std::to_string(lat.size()) + " found vs " +
                  std::to_string(oracle.size()) + " brute-force");
    lattice_entries += static_cast<long>(lat.size());
  }

  // Sylow subgroups: right order, agreement with the lattice filter, and
  // conjugate counts congruent to 1 mod p.
  long sylow_checks = 0;
  for (const char* text : {"symmetric:4", "symmetric:5", "alternating:5", "dihedral:6",
                           "metacyclic:13:4", "metacyclic:7:6", "cyclic:30",
                           "product(dihedral:4,cyclic:3)"}) {
    Group g = build(parse_group_spec(text), limits);
    for (long p : g.primes()) {
      long pp = 1;
      for (long n = g.order(); n % p == 0; n /= p) pp *= p;
      Subgroup s = sylow(g, p);
      if (s.order() != pp)
        return fail(std::string("sylow order wrong on ") + text);
      const auto& lat = all_subgroups(g);
      long filtered = 0;
      bool seen = false;
      for (size_t i = 0; i < lat.size(); ++i) {
        if (lat[i].order() != pp) continue;
        ++filtered;
        if (lat[i].mask() == s.mask()) seen = true;
      }
      auto conjugates = all_sylow(g, p);
      if (!seen || static_cast<long>(conjugates.size()) != filtered)
        return fail(std::string("sylow/lattice disagreement on ") + text);
      if (static_cast<long>(conjugates.size()) % p != 1 ||
          g.order() % static_cast<long>(conjugates.size()) != 0)
        return fail(std::string("sylow count not 1 mod p on ") + text);
      ++sylow_checks;
    }
  }

  // Chief series: the multiset of (factor order, induced automorphism order)
  // must not depend on the seed used to break ties between minimal normals.
  long series_checks = 0;
  for (const char* text : {"symmetric:4", "metacyclic:7:6", "dihedral:8",
                           "product(symmetric:3,symmetric:3)", "cyclic:36",
                           "metacyclic:11:10"}) {
    Group g = build(parse_group_spec(text), limits);
    auto invariant = [](const ChiefSeries& s) {
      std::multiset<std::pair<long, long>> m;
      for (const auto& f : s.factors) m.insert({f.order, f.induced_aut_order});
      return m;
    };
    auto base = invariant(chief_series(g));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      if (invariant(chief_series_with_seed(g, seed)) != base)
        return fail(std::string("chief invariant changed with seed on ") + text);
      ++series_checks;
    }
  }

  return pass(std::to_string(lattice_entries) + " lattice entries matched brute force, " +
              std::to_string(sylow_checks) + " Sylow families validated, " +
              std::to_string(series_checks) + " seeded chief series invariant");
}

// ---------------------------------------------------------------------------
// Criterion 7: class membership is hereditary. For twenty (group, sigma)
// pairs inside the class, every subgroup, every quotient, and (when small
// enough to square) the direct product G x G stay inside the class.
Outcome criterion_closure(const Limits& limits) {
  const std::vector<std::string> candidates = {
      "symmetric:3",      "dihedral:4",       "cyclic:12",
      "alternating:4",    "dihedral:6",       "metacyclic:5:4",
      "metacyclic:7:3",   "symmetric:4",      "dihedral:10",
      "cyclic:30",        "product(symmetric:3,cyclic:2)", "metacyclic:13:4",
      "dihedral:7",       "cyclic:16",        "metacyclic:11:5",
      "product(dihedral:4,cyclic:3)",         "cyclic:45",
      "metacyclic:7:6",   "dihedral:9",       "product(cyclic:2,cyclic:4)",
      "metacyclic:3:2",   "cyclic:8"};
  std::vector<SigmaSpec> presets = default_sigma_specs();

  long pairs = 0, subgroup_checks = 0, quotient_checks = 0, product_checks = 0;
  for (size_t i = 0; i < candidates.size() && pairs < 20; ++i) {
    Group g = build(parse_group_spec(candidates[i]), limits);
    std::optional<SigmaSpec> chosen;
    for (size_t k = 0; k < presets.size(); ++k) {
      const SigmaSpec& ss = presets[(i + k) % presets.size()];
      if (in_h_sigma_definitional(g, ss.resolve(g))) {
        chosen = ss;
        break;
      }
    }
    if (!chosen) continue;  // candidate sits outside the class for every preset
    ++pairs;

    const auto& lat = all_subgroups(g);
    for (size_t s = 0; s < lat.size(); ++s) {
      Group h = lat[s].as_group();
      if (!in_h_sigma_definitional(h, chosen->resolve(h)))
        return fail("subgroup of order " + std::to_string(h.order()) + " of " +
                    candidates[i] + " left the class under " + chosen->label);
      ++subgroup_checks;
    }
    for (const auto& n : normal_subgroups(g)) {
      Group q = quotient(g, n).quotient;
      if (!in_h_sigma_definitional(q, chosen->resolve(q)))
        return fail("quotient of order " + std::to_string(q.order()) + " of " +
                    candidates[i] + " left the class under " + chosen->label);
      ++quotient_checks;
    }
    if (g.order() * g.order() <= 300) {
      Group p = direct_product(g, g, limits);
      if (!in_h_sigma_definitional(p, chosen->resolve(p)))
        return fail("direct square of " + candidates[i] + " left the class under " +
                    chosen->label);
      ++product_checks;
    }
  }
  if (pairs != 20) return fail("only found " + std::to_string(pairs) + " eligible pairs");
  return pass("20 pairs: " + std::to_string(subgroup_checks) + " subgroups, " +
              std::to_string(quotient_checks) + " quotients, " +
              std::to_string(product_checks) + " direct squares all stayed in class");
}

// ---------------------------------------------------------------------------
// Criterion 8: the installed CLI writes byte-identical catalog JSON reports
// regardless of the worker count.
Outcome criterion_cli_determinism() {
  const char* bin = std::getenv("HALLCHECK_BIN");
  if (!bin || !*bin) return fail("HALLCHECK_BIN is not set");
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path();
  fs::path a = dir / "hallcheck-accept-a.json";
  fs::path b = dir / "hallcheck-accept-b.json";

  auto run = [&](const fs::path& out, int jobs) -> int {
    std::string cmd = std::string("\"") + bin + "\" catalog run --max-order 60 --jobs " +
                      std::to_string(jobs) + " --json \"" + out.string() +
                      "\" > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc == -1 || !WIFEXITED(rc)) return -1;
    return WEXITSTATUS(rc);
  };
  int ra = run(a, 1);
  int rb = run(b, 3);
  if (ra != 0 || rb != 0)
    return fail("CLI exited " + std::to_string(ra) + " and " + std::to_string(rb) +
                " (expected 0 and 0)");

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string ja = slurp(a), jb = slurp(b);
  std::error_code ec;
  fs::remove(a, ec);
  fs::remove(b, ec);
  if (ja.empty() || ja.front() != '{') return fail("report is empty or not JSON");
  if (ja != jb) return fail("reports differ between --jobs 1 and --jobs 3");
  return pass("catalog reports (" + std::to_string(ja.size()) +
              " bytes) byte-identical across --jobs 1 and --jobs 3");
}

}  // namespace

int main() {
  Limits limits;
  RunOptions opts;
  opts.jobs = worker_count();
  std::vector<GroupRunResult> results = run_catalog(default_catalog(), opts);

  struct Entry {
    const char* name;
    std::function<Outcome()> fn;
  };
  const std::vector<Entry> criteria = {
      {"statement B equivalence on soluble groups up to order 200 x 3 presets",
       [&] { return criterion_equivalence(results); }},
      {"metacyclic:7:6 class membership flips between paper-example and sylow",
       [&] { return criterion_flagship_group(limits); }},
      {"statements A, C1.1, C1.2 consistent over the full catalog",
       [&] { return criterion_sufficiency(results); }},
      {"statement C1.3 double encoding agrees on every soluble group",
       [&] { return criterion_double_encoding(results); }},
      {"statement L2.1 triple sweep clean on groups up to order 100",
       [&] { return criterion_triple_sweep(results, limits); }},
      {"engine oracles: lattice brute force, Sylow counts, chief invariants",
       [&] { return criterion_engine_oracles(limits); }},
      {"class closed under subgroups, quotients and direct squares (20 pairs)",
       [&] { return criterion_closure(limits); }},
      {"CLI catalog JSON byte-identical across worker counts",
       [&] { return criterion_cli_determinism(); }},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].fn();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << "/" << criteria.size()
              << " " << criteria[i].name << " — " << o.detail << std::endl;
  }
  std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
