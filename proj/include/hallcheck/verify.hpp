#pragma once

#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "hallcheck/catalog.hpp"

namespace hallcheck {

/// Outcome of checking one statement against one group (and, where it
/// matters, one sigma partition). `consistent` is the logical health of the
/// statement: for implications NOT(hypothesis AND NOT conclusion), for
/// equivalences (hypothesis == conclusion). A skipped verdict (resource cap
/// or statement not applicable) carries a reason and counts as neither
/// consistent nor inconsistent evidence.
struct Verdict {
  std::string statement_id;  // A, B, C1.1, C1.2, C1.3, L2.1
  std::string group_label;
  std::string sigma_label = "-";
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  bool consistent = true;
  std::optional<std::string> witness;      // present iff consistent is false
  std::optional<std::string> skip_reason;  // present iff skipped
  bool resource_capped = false;            // skip caused by a resource cap

  bool skipped() const { return skip_reason.has_value(); }
};

inline std::string describe_subgroup(const Subgroup& H) {
  std::string out = "order " + std::to_string(H.order()) + " = <";
  auto gens = H.small_generating_perms();
  if (gens.empty()) out += "()";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].to_cycle_string();
  }
  return out + ">";
}

namespace detail {

inline void mark_capped(Verdict& v, const resource_limit_error& e) {
  v.skip_reason = std::string("resource cap: ") + e.what();
  v.resource_capped = true;
  v.hypothesis_holds = false;
  v.conclusion_holds = false;
  v.consistent = true;
  v.witness.reset();
}

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // unbiased enough for sampling; deterministic across platforms
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace detail

/// Statement A: if some complete Hall sigma-set has all members supersoluble
/// and every maximal subgroup of each non-cyclic member permutes with every
/// other member, then the group is supersoluble.
inline Verdict verify_theorem_a(const Group& G, const SigmaPartition& sigma,
                                const std::string& group_label) {
  Verdict v;
  v.statement_id = "A";
  v.group_label = group_label;
  v.sigma_label = sigma.label();
  try {
    long satisfying_set = 0;
    long seen = 0;
    bool hyp = false;
    for_each_complete_hall_set(G, sigma, [&](const HallSet& hs) {
      ++seen;
      if (maximal_permutability_hypothesis(hs, MaximalScope::noncyclic_members)) {
        hyp = true;
        satisfying_set = seen;
        return false;
      }
      return true;
    });
    v.hypothesis_holds = hyp;
    v.conclusion_holds = is_supersoluble(G);
    v.consistent = !(v.hypothesis_holds && !v.conclusion_holds);
    if (!v.consistent) {
      v.witness = "complete Hall sigma-set #" + std::to_string(satisfying_set) +
                  " satisfies the hypothesis but the group is not supersoluble";
    }
  } catch (const resource_limit_error& e) {
    detail::mark_capped(v, e);
  }
  return v;
}

/// Statement C1.1: statement A at the Sylow partition, with the
/// maximal-subgroup condition applied to every member (cyclic ones too).
/// The quantifier over complete Sylow sets is existential by default;
/// `all_sets` switches to the universal reading.
inline Verdict verify_corollary_1_1(const Group& G, const std::string& group_label,
                                    bool all_sets = false) {
  Verdict v;
  v.statement_id = "C1.1";
  v.group_label = group_label;
  v.sigma_label = "sylow";
  try {
    SigmaPartition sigma = SigmaPartition::sylow_for(G.primes(), "sylow");
    bool any = false, all = true;
    for_each_complete_hall_set(G, sigma, [&](const HallSet& hs) {
      bool h = maximal_permutability_hypothesis(hs, MaximalScope::all_members);
      any = any || h;
      all = all && h;
      // stop early when the chosen quantifier is decided
      if (!all_sets && any) return false;
      if (all_sets && !all) return false;
      return true;
    });
    v.hypothesis_holds = all_sets ? all : any;
    v.conclusion_holds = is_supersoluble(G);
    v.consistent = !(v.hypothesis_holds && !v.conclusion_holds);
    if (!v.consistent)
      v.witness =
          "a complete Sylow set satisfies the maximal-permutability condition "
          "but the group is not supersoluble";
  } catch (const resource_limit_error& e) {
    detail::mark_capped(v, e);
  }
  return v;
}

/// Statement C1.2: if every Sylow subgroup is cyclic, the group is
/// supersoluble.
inline Verdict verify_corollary_1_2(const Group& G, const std::string& group_label) {
  Verdict v;
  v.statement_id = "C1.2";
  v.group_label = group_label;
  v.sigma_label = "sylow";
  try {
    bool hyp = true;
    for (long p : G.primes()) {
      if (!is_cyclic_subgroup(sylow(G, p))) {
        hyp = false;
        break;
      }
    }
    v.hypothesis_holds = hyp;
    v.conclusion_holds = is_supersoluble(G);
    v.consistent = !(v.hypothesis_holds && !v.conclusion_holds);
    if (!v.consistent)
      v.witness = "all Sylow subgroups are cyclic but the group is not supersoluble";
  } catch (const resource_limit_error& e) {
    detail::mark_capped(v, e);
  }
  return v;
}

namespace detail {

inline std::string describe_basis_violation(const SigmaPartition& sigma,
                                            const BasisViolation& bv) {
  return "complete Hall sigma-set #" + std::to_string(bv.set_number) +
         ": members for class " + sigma.class_name(bv.class_a) + " (" +
         describe_subgroup(bv.subgroup_a) + ") and class " +
         sigma.class_name(bv.class_b) + " (" + describe_subgroup(bv.subgroup_b) +
         ") do not permute";
}

inline std::string describe_chief_failure(const SigmaPartition& sigma,
                                          const ChiefCriterionCheck& c) {
  std::string primes;
  for (long q : c.aut_primes) {
    if (!primes.empty()) primes += ",";
    primes += std::to_string(q);
  }
  return "chief factor #" + std::to_string(c.factor_index + 1) + " of order " +
         std::to_string(c.factor_order) + " (prime " + std::to_string(c.prime) +
         ", class " + sigma.class_name(sigma.class_of(c.prime)) +
         "): induced automorphism group of order " +
         std::to_string(c.induced_aut_order) + " with primes {" + primes +
         "} fits no admissible class pair";
}

}  // namespace detail

/// Statement B: for a soluble group, membership in h_sigma by definition
/// (every complete Hall sigma-set is a sigma-basis) is equivalent to the
/// chief-factor criterion on induced automorphism groups. Non-soluble groups
/// are out of the statement's scope and reported as skipped.
inline Verdict verify_theorem_b(const Group& G, const SigmaPartition& sigma,
                                const std::string& group_label) {
  Verdict v;
  v.statement_id = "B";
  v.group_label = group_label;
  v.sigma_label = sigma.label();
  try {
    if (!is_soluble(G)) {
      v.skip_reason = "not applicable: group is not soluble";
      return v;
    }
    auto lhs = in_h_sigma_definitional_analysis(G, sigma, /*stop_at_first_violation=*/true);
    auto rhs = in_h_sigma_chief_criterion_analysis(G, sigma);
    v.hypothesis_holds = lhs.in_class;
    v.conclusion_holds = rhs.in_class;
    v.consistent = v.hypothesis_holds == v.conclusion_holds;
    if (!v.consistent) {
      if (lhs.in_class && rhs.first_failure)
        v.witness = detail::describe_chief_failure(sigma, rhs.checks[*rhs.first_failure]);
      else if (lhs.violation)
        v.witness = detail::describe_basis_violation(sigma, *lhs.violation);
      else
        v.witness = "sides disagree without a materialized witness";
    }
  } catch (const resource_limit_error& e) {
    detail::mark_capped(v, e);
  }
  return v;
}

/// Statement C1.3: for a soluble group, every complete Sylow set is a Sylow
/// basis exactly when each chief factor's induced automorphism group has at
/// most one prime different from the factor prime. The right side is also
/// cross-checked against the general chief-factor criterion at the Sylow
/// partition; a mismatch between those two encodings is an inconsistency of
/// its own.
inline Verdict verify_corollary_1_3(const Group& G, const std::string& group_label) {
  Verdict v;
  v.statement_id = "C1.3";
  v.group_label = group_label;
  v.sigma_label = "sylow";
  try {
    if (!is_soluble(G)) {
      v.skip_reason = "not applicable: group is not soluble";
      return v;
    }
    SigmaPartition sigma = SigmaPartition::sylow_for(G.primes(), "sylow");
    bool lhs = in_h_sigma_definitional(G, sigma);
    bool rhs = sylow_basis_chief_criterion(G);
    bool cross = in_h_sigma_chief_criterion(G, sigma);
    v.hypothesis_holds = lhs;
    v.conclusion_holds = rhs;
    v.consistent = (lhs == rhs) && (rhs == cross);
    if (!v.consistent) {
      if (rhs != cross)
        v.witness =
            "internal encoding disagreement: the at-most-one-foreign-prime "
            "formulation and the class-pair criterion differ at the Sylow partition";
      else
        v.witness = lhs ? "every complete Sylow set is a basis yet a chief factor fails "
                          "the at-most-one-foreign-prime condition"
                        : "some complete Sylow set is not a basis yet every chief factor "
                          "passes the at-most-one-foreign-prime condition";
    }
  } catch (const resource_limit_error& e) {
    detail::mark_capped(v, e);
  }
  return v;
}

/// Statement L2.1 for one concrete triple: if H, K, N are pairwise
/// permutable subgroups and H is a Hall subgroup of G (order coprime to
/// index), then N intersect HK equals (N intersect H)(N intersect K) as
/// element sets.
inline Verdict verify_lemma_2_1(const Group& G, const Subgroup& H, const Subgroup& K,
                                const Subgroup& N, const std::string& group_label) {
  if (!H.parent().same_group(G) || !K.parent().same_group(G) || !N.parent().same_group(G))
    throw structural_error("lemma subgroups must live in the given group");
  Verdict v;
  v.statement_id = "L2.1";
  v.group_label = group_label;
  bool hall_h = std::gcd(H.order(), G.order() / H.order()) == 1;
  bool perms = permutable(H, K) && permutable(H, N) && permutable(K, N);
  v.hypothesis_holds = hall_h && perms;
  detail::IndexMask lhs = N.mask() & product_set(H, K).mask();
  detail::IndexMask rhs = product_set(intersection(N, H), intersection(N, K)).mask();
  v.conclusion_holds = lhs == rhs;
  v.consistent = !(v.hypothesis_holds && !v.conclusion_holds);
  if (!v.consistent)
    v.witness = "H " + describe_subgroup(H) + ", K " + describe_subgroup(K) + ", N " +
                describe_subgroup(N) + ": N intersect HK has " +
                std::to_string(lhs.count()) + " elements, (N intersect H)(N intersect K) has " +
                std::to_string(rhs.count());
  return v;
}

struct LemmaSweepOptions {
  long max_group_order = 100;   // groups above this are reported as skipped
  long exhaustive_cutoff = 500;  // lattice size up to which all triples run
  long random_triples = 1000;    // sample size above the cutoff
};

struct LemmaSweepStats {
  bool exhaustive = false;
  long hall_count = 0;
  long triples_checked = 0;   // triples passing the permutability hypothesis
  long violations = 0;
};

/// Statement L2.1 swept over subgroup triples of one group: every triple
/// (H, K, N) with H a Hall subgroup and all three pairwise permutable must
/// satisfy the intersection identity. Exhaustive over all triples when the
/// lattice is small, deterministic random sampling otherwise.
inline Verdict verify_lemma_2_1_sweep(const Group& G, const std::string& group_label,
                                      const LemmaSweepOptions& opts = {},
                                      LemmaSweepStats* stats_out = nullptr) {
  Verdict v;
  v.statement_id = "L2.1";
  v.group_label = group_label;
  if (G.order() > opts.max_group_order) {
    v.skip_reason = "not sampled: group order " + std::to_string(G.order()) +
                    " above the sweep bound " + std::to_string(opts.max_group_order);
    return v;
  }
  LemmaSweepStats stats;
  try {
    const auto& lat = all_subgroups(G);
    size_t S = lat.size();
    std::vector<size_t> halls;
    for (size_t i = 0; i < S; ++i)
      if (std::gcd(lat[i].order(), G.order() / lat[i].order()) == 1) halls.push_back(i);
    stats.hall_count = static_cast<long>(halls.size());

    std::optional<std::string> witness;
    auto check_triple = [&](size_t h, size_t k, size_t n, const detail::IndexMask& hk) {
      ++stats.triples_checked;
      detail::IndexMask lhs = lat[n].mask() & hk;
      detail::IndexMask rhs =
          product_set(intersection(lat[n], lat[h]), intersection(lat[n], lat[k])).mask();
      if (!(lhs == rhs)) {
        ++stats.violations;
        if (!witness)
          witness = "H " + describe_subgroup(lat[h]) + ", K " + describe_subgroup(lat[k]) +
                    ", N " + describe_subgroup(lat[n]) +
                    ": N intersect HK has " + std::to_string(lhs.count()) +
                    " elements, (N intersect H)(N intersect K) has " +
                    std::to_string(rhs.count());
      }
    };

    if (static_cast<long>(S) <= opts.exhaustive_cutoff) {
      stats.exhaustive = true;
      // Pairwise permutability matrix once, then triple scan.
      std::vector<std::vector<bool>> pm(S, std::vector<bool>(S, false));
      for (size_t i = 0; i < S; ++i) {
        pm[i][i] = true;
        for (size_t j = i + 1; j < S; ++j) {
          bool p = permutable(lat[i], lat[j]);
          pm[i][j] = p;
          pm[j][i] = p;
        }
      }
      for (size_t h : halls) {
        for (size_t k = 0; k < S; ++k) {
          if (!pm[h][k]) continue;
          // product mask reused across the N loop
          detail::IndexMask hk = product_set(lat[h], lat[k]).mask();
          for (size_t n = 0; n < S; ++n) {
            if (!pm[h][n] || !pm[k][n]) continue;
            check_triple(h, k, n, hk);
          }
        }
      }
    } else {
      detail::SplitMix64 rng{G.fingerprint() ^ 0x9d2c5680a138b2c4ull};
      for (long t = 0; t < opts.random_triples; ++t) {
        size_t h = halls[static_cast<size_t>(rng.below(halls.size()))];
        size_t k = static_cast<size_t>(rng.below(S));
        size_t n = static_cast<size_t>(rng.below(S));
        if (!permutable(lat[h], lat[k]) || !permutable(lat[h], lat[n]) ||
            !permutable(lat[k], lat[n]))
          continue;
        check_triple(h, k, n, product_set(lat[h], lat[k]).mask());
      }
    }

    v.hypothesis_holds = stats.triples_checked > 0;
    v.conclusion_holds = stats.violations == 0;
    v.consistent = !(v.hypothesis_holds && !v.conclusion_holds);
    if (!v.consistent) v.witness = witness;
  } catch (const resource_limit_error& e) {
    detail::mark_capped(v, e);
  }
  if (stats_out) *stats_out = stats;
  return v;
}

// ---- catalog runner ----

struct RunOptions {
  Limits limits{};
  std::vector<SigmaSpec> sigmas = default_sigma_specs();
  bool c11_all_sets = false;
  LemmaSweepOptions lemma{};
  std::optional<long> max_order;  // skip catalog entries above this order
  int jobs = 1;
};

struct GroupRunResult {
  std::string label;
  bool built = false;
  std::string build_error;
  long order = 0;
  int degree = 0;
  double elapsed_ms = 0.0;
  std::vector<Verdict> verdicts;
};

/// Expected order of a built-in spec without building it; used for
/// --max-order filtering. Raw specs answer nullopt.
inline std::optional<long> predicted_order(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::cyclic: return spec.n;
    case K::dihedral: return 2 * spec.n;
    case K::symmetric:
    case K::alternating: {
      if (spec.n > 20) return std::nullopt;
      long f = 1;
      for (long i = 2; i <= spec.n; ++i) f *= i;
      return spec.kind == K::symmetric ? f : f / 2;
    }
    case K::metacyclic: return spec.p * spec.d;
    case K::product: {
      auto a = predicted_order(spec.children[0]);
      auto b = predicted_order(spec.children[1]);
      if (a && b) return *a * *b;
      return std::nullopt;
    }
    case K::raw: return std::nullopt;
  }
  return std::nullopt;
}

/// All statements against one group: A and B per sigma spec, then the
/// sigma-independent C1.1, C1.2, C1.3 and the L2.1 sweep.
inline GroupRunResult run_group(const GroupSpec& spec, const RunOptions& opts) {
  GroupRunResult r;
  r.label = spec.label.empty() ? to_string(spec) : spec.label;
  auto t0 = std::chrono::steady_clock::now();
  Group G;
  try {
    G = build(spec, opts.limits);
  } catch (const error& e) {
    r.build_error = e.what();
    return r;
  }
  r.built = true;
  r.order = G.order();
  r.degree = G.degree();
  for (const auto& ss : opts.sigmas) {
    SigmaPartition sigma = ss.resolve(G);
    r.verdicts.push_back(verify_theorem_a(G, sigma, r.label));
    r.verdicts.push_back(verify_theorem_b(G, sigma, r.label));
  }
  r.verdicts.push_back(verify_corollary_1_1(G, r.label, opts.c11_all_sets));
  r.verdicts.push_back(verify_corollary_1_2(G, r.label));
  r.verdicts.push_back(verify_corollary_1_3(G, r.label));
  r.verdicts.push_back(verify_lemma_2_1_sweep(G, r.label, opts.lemma));
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

/// Runs the catalog; with jobs > 1, groups are processed concurrently and
/// merged back in catalog order, so the result is identical to a sequential
/// run.
inline std::vector<GroupRunResult> run_catalog(const std::vector<GroupSpec>& specs,
                                               const RunOptions& opts) {
  std::vector<const GroupSpec*> selected;
  for (const auto& spec : specs) {
    if (opts.max_order) {
      auto po = predicted_order(spec);
      if (po && *po > *opts.max_order) continue;
    }
    selected.push_back(&spec);
  }
  std::vector<GroupRunResult> results(selected.size());
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < selected.size(); ++i) results[i] = run_group(*selected[i], opts);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= selected.size()) break;
        results[i] = run_group(*selected[i], opts);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  // Post-filter raw/unpredictable specs that exceeded --max-order.
  if (opts.max_order) {
    std::vector<GroupRunResult> kept;
    for (auto& r : results)
      if (!r.built || r.order <= *opts.max_order) kept.push_back(std::move(r));
    results = std::move(kept);
  }
  return results;
}

/// Only the interesting verdicts: inconsistencies and skips. An empty result
/// over the default catalog is the tool's full-confirmation state. Build
/// failures (possible under tightened caps) surface as skipped pseudo-verdicts
/// with statement id "build".
inline std::vector<Verdict> counterexample_search(const std::vector<GroupSpec>& specs,
                                                  const RunOptions& opts) {
  std::vector<Verdict> out;
  for (const auto& r : run_catalog(specs, opts)) {
    if (!r.built) {
      Verdict v;
      v.statement_id = "build";
      v.group_label = r.label;
      v.skip_reason = r.build_error;
      v.resource_capped = true;
      out.push_back(std::move(v));
      continue;
    }
    for (const auto& v : r.verdicts)
      if (!v.consistent || v.skipped()) out.push_back(v);
  }
  return out;
}

}  // namespace hallcheck
