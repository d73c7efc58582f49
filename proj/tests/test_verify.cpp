#include <catch2/catch_amalgamated.hpp>

#include "hallcheck/verify.hpp"

using namespace hallcheck;

namespace {

bool same_verdict(const Verdict& a, const Verdict& b) {
  return a.statement_id == b.statement_id && a.group_label == b.group_label &&
         a.sigma_label == b.sigma_label && a.hypothesis_holds == b.hypothesis_holds &&
         a.conclusion_holds == b.conclusion_holds && a.consistent == b.consistent &&
         a.witness == b.witness && a.skip_reason == b.skip_reason &&
         a.resource_capped == b.resource_capped;
}

}  // namespace

TEST_CASE("statement A on groups with known outcomes") {
  Group f42 = build(metacyclic_spec(7, 6));
  SigmaPartition paper({{2, 3}, {7}}, true, "paper-example");
  Verdict v = verify_theorem_a(f42, paper, "f42");
  CHECK(v.hypothesis_holds);   // members are cyclic, so the condition is vacuous
  CHECK(v.conclusion_holds);   // the group is supersoluble
  CHECK(v.consistent);
  CHECK(!v.witness.has_value());
  CHECK(!v.skipped());

  Group s4 = build(symmetric_spec(4));
  Verdict v2 = verify_theorem_a(s4, SigmaPartition::sylow_for(s4.primes()), "s4");
  CHECK(!v2.hypothesis_holds);  // no Sylow set passes the permutability condition
  CHECK(!v2.conclusion_holds);
  CHECK(v2.consistent);

  // An insoluble group must never satisfy the hypothesis.
  Group a5 = build(alternating_spec(5));
  Verdict v3 = verify_theorem_a(a5, SigmaPartition::sylow_for(a5.primes()), "a5");
  CHECK(!v3.hypothesis_holds);
  CHECK(!v3.conclusion_holds);
  CHECK(v3.consistent);
}

TEST_CASE("statement A respects the hall set cap") {
  Limits tight;
  tight.max_hall_sets = 5;
  // The symmetric group on four points has twelve complete Sylow sets and no
  // satisfying one, so the enumeration must run past the cap.
  Group s4 = Group::generate(
      4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})}, tight);
  Verdict v = verify_theorem_a(s4, SigmaPartition::sylow_for(s4.primes()), "s4");
  CHECK(v.skipped());
  CHECK(v.resource_capped);
  CHECK(v.consistent);
  REQUIRE(v.skip_reason.has_value());
  CHECK(v.skip_reason->find("resource cap") != std::string::npos);
}

TEST_CASE("statement C1.1 on groups with known outcomes") {
  Group f42 = build(metacyclic_spec(7, 6));
  Verdict v = verify_corollary_1_1(f42, "f42");
  CHECK(v.hypothesis_holds);
  CHECK(v.conclusion_holds);
  CHECK(v.consistent);

  Group s4 = build(symmetric_spec(4));
  Verdict v2 = verify_corollary_1_1(s4, "s4");
  CHECK(!v2.hypothesis_holds);
  CHECK(!v2.conclusion_holds);
  CHECK(v2.consistent);

  // The universal reading implies the existential one.
  for (const auto& spec : {metacyclic_spec(7, 6), symmetric_spec(4), dihedral_spec(6),
                           alternating_spec(4), cyclic_spec(30)}) {
    Group G = build(spec);
    bool universal = verify_corollary_1_1(G, "g", true).hypothesis_holds;
    bool existential = verify_corollary_1_1(G, "g", false).hypothesis_holds;
    INFO("group " << to_string(spec));
    CHECK((!universal || existential));
  }
}

TEST_CASE("statement C1.2 on groups with known outcomes") {
  struct Row {
    GroupSpec spec;
    bool hyp;
    bool concl;
  };
  std::vector<Row> rows{
      {cyclic_spec(30), true, true},
      {metacyclic_spec(7, 6), true, true},
      {symmetric_spec(3), true, true},
      {symmetric_spec(4), false, false},  // Sylow 2 is dihedral
      {alternating_spec(5), false, false},
      {dihedral_spec(4), false, true},    // D4 is supersoluble anyway
  };
  for (const auto& row : rows) {
    INFO("group " << to_string(row.spec));
    Verdict v = verify_corollary_1_2(build(row.spec), "g");
    CHECK(v.hypothesis_holds == row.hyp);
    CHECK(v.conclusion_holds == row.concl);
    CHECK(v.consistent);
  }
}

TEST_CASE("statement B equivalence on known groups") {
  Group s4 = build(symmetric_spec(4));
  Verdict v = verify_theorem_b(s4, SigmaPartition::sylow_for(s4.primes()), "s4");
  CHECK(v.hypothesis_holds);
  CHECK(v.conclusion_holds);
  CHECK(v.consistent);

  Group f42 = build(metacyclic_spec(7, 6));
  Verdict v2 = verify_theorem_b(f42, SigmaPartition::sylow_for(f42.primes()), "f42");
  CHECK(!v2.hypothesis_holds);
  CHECK(!v2.conclusion_holds);
  CHECK(v2.consistent);

  Verdict v3 = verify_theorem_b(f42, SigmaPartition({{2, 3}, {7}}, true), "f42");
  CHECK(v3.hypothesis_holds);
  CHECK(v3.conclusion_holds);
  CHECK(v3.consistent);
}

TEST_CASE("statement B skips insoluble groups") {
  Group a5 = build(alternating_spec(5));
  Verdict v = verify_theorem_b(a5, SigmaPartition::sylow_for(a5.primes()), "a5");
  CHECK(v.skipped());
  CHECK(!v.resource_capped);
  CHECK(*v.skip_reason == "not applicable: group is not soluble");
  CHECK(v.consistent);  // a skip is not evidence either way
}

TEST_CASE("statement C1.3 on known groups") {
  Verdict v = verify_corollary_1_3(build(metacyclic_spec(31, 30)), "m31");
  CHECK(!v.hypothesis_holds);
  CHECK(!v.conclusion_holds);
  CHECK(v.consistent);

  Verdict v2 = verify_corollary_1_3(build(symmetric_spec(4)), "s4");
  CHECK(v2.hypothesis_holds);
  CHECK(v2.conclusion_holds);
  CHECK(v2.consistent);

  Verdict v3 = verify_corollary_1_3(build(alternating_spec(5)), "a5");
  CHECK(v3.skipped());
}

TEST_CASE("statement L2.1 on a single triple") {
  Group s4 = build(symmetric_spec(4));
  Subgroup d4 = sylow(s4, 2);
  Subgroup c3 = sylow(s4, 3);
  Subgroup a4 = Subgroup::generated_by_perms(
      s4, {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{1, 2, 3}})});

  Verdict v = verify_lemma_2_1(s4, d4, c3, a4, "s4");
  CHECK(v.hypothesis_holds);  // D4 is a Hall subgroup; all pairs permute
  CHECK(v.conclusion_holds);
  CHECK(v.consistent);

  // A violated precondition only makes the hypothesis false; it is not an
  // error and the verdict stays consistent.
  Subgroup c2 = Subgroup::generated_by_perms(s4, {Perm::from_cycles(4, {{0, 1}})});
  Verdict v2 = verify_lemma_2_1(s4, c2, c3, a4, "s4");
  CHECK(!v2.hypothesis_holds);  // gcd(2, 12) != 1, so H is not a Hall subgroup
  CHECK(v2.consistent);

  // Non-permutable pair: hypothesis false again.
  Subgroup c2b = Subgroup::generated_by_perms(s4, {Perm::from_cycles(4, {{1, 2}})});
  Verdict v3 = verify_lemma_2_1(s4, d4, c2b, c3, "s4");
  CHECK(!v3.hypothesis_holds);

  Group other = build(symmetric_spec(4));
  CHECK_THROWS_AS(verify_lemma_2_1(other, d4, c3, a4, "s4"), structural_error);
}

TEST_CASE("statement L2.1 sweep is exhaustive on small lattices") {
  Group s4 = build(symmetric_spec(4));
  LemmaSweepStats stats;
  Verdict v = verify_lemma_2_1_sweep(s4, "s4", {}, &stats);
  CHECK(v.hypothesis_holds);
  CHECK(v.conclusion_holds);
  CHECK(v.consistent);
  CHECK(stats.exhaustive);
  CHECK(stats.hall_count == 9);  // orders 1, 3 (x4), 8 (x3), 24
  CHECK(stats.violations == 0);
  CHECK(stats.triples_checked > 0);
}

TEST_CASE("statement L2.1 sweep skips oversized groups") {
  Group m = build(metacyclic_spec(11, 10));
  Verdict v = verify_lemma_2_1_sweep(m, "m");
  CHECK(v.skipped());
  CHECK(!v.resource_capped);
  CHECK(v.skip_reason->find("not sampled") == 0);
}

TEST_CASE("statement L2.1 sweep random sampling is deterministic") {
  Group s4 = build(symmetric_spec(4));
  LemmaSweepOptions opts;
  opts.exhaustive_cutoff = 10;  // force the sampling branch (lattice has 30)
  opts.random_triples = 400;
  LemmaSweepStats s1, s2;
  Verdict v1 = verify_lemma_2_1_sweep(s4, "s4", opts, &s1);
  Verdict v2 = verify_lemma_2_1_sweep(s4, "s4", opts, &s2);
  CHECK(!s1.exhaustive);
  CHECK(s1.triples_checked == s2.triples_checked);
  CHECK(s1.violations == 0);
  CHECK(same_verdict(v1, v2));
  CHECK(v1.conclusion_holds);
}

TEST_CASE("run_group produces the expected verdict block") {
  RunOptions opts;
  GroupRunResult r = run_group(metacyclic_spec(7, 6), opts);
  CHECK(r.built);
  CHECK(r.order == 42);
  CHECK(r.degree == 7);
  // A and B for each of the three default sigma specs, then C1.1, C1.2,
  // C1.3 and the L2.1 sweep.
  REQUIRE(r.verdicts.size() == 10);
  CHECK(r.verdicts[0].statement_id == "A");
  CHECK(r.verdicts[1].statement_id == "B");
  CHECK(r.verdicts[0].sigma_label == "sylow");
  CHECK(r.verdicts[2].sigma_label == "paper-example");
  CHECK(r.verdicts[4].sigma_label == "two-class");
  CHECK(r.verdicts[6].statement_id == "C1.1");
  CHECK(r.verdicts[7].statement_id == "C1.2");
  CHECK(r.verdicts[8].statement_id == "C1.3");
  CHECK(r.verdicts[9].statement_id == "L2.1");
  for (const auto& v : r.verdicts) CHECK(v.consistent);
}

TEST_CASE("run_group reports build failures") {
  RunOptions opts;
  opts.limits.max_order = 10;
  GroupRunResult r = run_group(symmetric_spec(5), opts);
  CHECK(!r.built);
  CHECK(!r.build_error.empty());
  CHECK(r.verdicts.empty());
}

TEST_CASE("run_catalog filters by predicted order") {
  std::vector<GroupSpec> specs{cyclic_spec(6), symmetric_spec(5), dihedral_spec(10),
                               metacyclic_spec(11, 10)};
  RunOptions opts;
  opts.max_order = 60;
  auto results = run_catalog(specs, opts);
  REQUIRE(results.size() == 2);
  CHECK(results[0].label == "cyclic:6");
  CHECK(results[1].label == "dihedral:10");
}

TEST_CASE("parallel catalog runs match sequential ones") {
  std::vector<GroupSpec> specs{cyclic_spec(12),       symmetric_spec(4),
                               dihedral_spec(6),      metacyclic_spec(7, 6),
                               alternating_spec(4),   cyclic_spec(30),
                               product_spec(symmetric_spec(3), cyclic_spec(2))};
  RunOptions seq;
  RunOptions par;
  par.jobs = 4;
  auto a = run_catalog(specs, seq);
  auto b = run_catalog(specs, par);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].order == b[i].order);
    REQUIRE(a[i].verdicts.size() == b[i].verdicts.size());
    for (size_t j = 0; j < a[i].verdicts.size(); ++j)
      CHECK(same_verdict(a[i].verdicts[j], b[i].verdicts[j]));
  }
}

TEST_CASE("counterexample search over a healthy slice is quiet") {
  std::vector<GroupSpec> specs{cyclic_spec(12), symmetric_spec(4), dihedral_spec(6),
                               metacyclic_spec(7, 6)};
  RunOptions opts;
  auto findings = counterexample_search(specs, opts);
  CHECK(findings.empty());
}

TEST_CASE("counterexample search surfaces build failures as pseudo-verdicts") {
  RunOptions opts;
  opts.limits.max_order = 20;
  auto findings = counterexample_search({symmetric_spec(4), cyclic_spec(6)}, opts);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].statement_id == "build");
  CHECK(findings[0].group_label == "symmetric:4");
  CHECK(findings[0].resource_capped);
}

TEST_CASE("witness text pinpoints the non-permutable pair") {
  // Force an artificial inconsistency report path by checking the describe
  // helpers through a genuine violation.
  Group f42 = build(metacyclic_spec(7, 6));
  SigmaPartition sylow_sigma = SigmaPartition::sylow_for(f42.primes());
  auto r = in_h_sigma_definitional_analysis(f42, sylow_sigma, true);
  REQUIRE(r.violation.has_value());
  std::string text = detail::describe_basis_violation(sylow_sigma, *r.violation);
  CHECK(text.find("do not permute") != std::string::npos);
  CHECK(text.find("order 2") != std::string::npos);
  CHECK(text.find("order 3") != std::string::npos);
}
