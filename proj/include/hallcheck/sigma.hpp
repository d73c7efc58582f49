#pragma once

#include <functional>
#include <optional>

#include "hallcheck/series.hpp"

namespace hallcheck {

/// A partition of the primes into disjoint classes. Only finitely many
/// classes are listed; `has_rest` adds one implicit class holding every
/// prime not listed, which keeps partitions of the infinite prime set
/// finitely representable. Classes are canonicalized by ascending smallest
/// element; the rest class, when present, is index `explicit_class_count()`.
class SigmaPartition {
public:
  static constexpr size_t npos = static_cast<size_t>(-1);

  SigmaPartition(std::vector<std::set<long>> classes, bool has_rest,
                 std::string label = "")
      : classes_(std::move(classes)), has_rest_(has_rest), label_(std::move(label)) {
    if (classes_.empty() && !has_rest_)
      throw config_error("sigma partition must cover at least one prime");
    for (const auto& cls : classes_) {
      if (cls.empty()) throw config_error("sigma class must be non-empty");
      for (long p : cls)
        if (!is_prime(p))
          throw config_error("sigma class member " + std::to_string(p) +
                             " is not prime");
    }
    std::sort(classes_.begin(), classes_.end(),
              [](const std::set<long>& a, const std::set<long>& b) {
                return *a.begin() < *b.begin();
              });
    std::set<long> seen;
    for (const auto& cls : classes_)
      for (long p : cls)
        if (!seen.insert(p).second)
          throw config_error("sigma classes are not disjoint: prime " +
                             std::to_string(p) + " appears twice");
    if (label_.empty()) label_ = canonical_text();
  }

  /// The partition into prime singletons, materialized over a finite prime
  /// set (every other prime goes to the rest class). Equivalent to the full
  /// singleton partition for any group whose primes are all listed.
  static SigmaPartition sylow_for(const std::set<long>& primes,
                                  std::string label = "sylow") {
    std::vector<std::set<long>> classes;
    for (long p : primes) classes.push_back({p});
    return SigmaPartition(std::move(classes), true, std::move(label));
  }

  const std::vector<std::set<long>>& classes() const { return classes_; }
  bool has_rest() const { return has_rest_; }
  size_t explicit_class_count() const { return classes_.size(); }
  size_t class_count() const { return classes_.size() + (has_rest_ ? 1 : 0); }
  size_t rest_index() const { return has_rest_ ? classes_.size() : npos; }
  const std::string& label() const { return label_; }

  /// Index of the unique class containing p (the rest class counts).
  size_t class_of(long p) const {
    if (!is_prime(p))
      throw config_error("class_of: " + std::to_string(p) + " is not prime");
    for (size_t i = 0; i < classes_.size(); ++i)
      if (classes_[i].count(p)) return i;
    if (has_rest_) return classes_.size();
    throw config_error("prime " + std::to_string(p) +
                       " is not covered by the sigma partition");
  }

  bool covers(long p) const {
    if (has_rest_) return true;
    for (const auto& cls : classes_)
      if (cls.count(p)) return true;
    return false;
  }

  std::string class_name(size_t index) const {
    if (index == classes_.size() && has_rest_) return "rest";
    const auto& cls = classes_.at(index);
    std::string out = "{";
    for (long p : cls) {
      if (out.size() > 1) out += ',';
      out += std::to_string(p);
    }
    return out + "}";
  }

  std::string canonical_text() const {
    std::string out;
    for (size_t i = 0; i < classes_.size(); ++i) {
      if (i) out += ' ';
      out += class_name(i);
    }
    if (has_rest_) {
      if (!classes_.empty()) out += ' ';
      out += "rest";
    }
    return out;
  }

  friend bool operator==(const SigmaPartition& a, const SigmaPartition& b) {
    return a.classes_ == b.classes_ && a.has_rest_ == b.has_rest_;
  }

private:
  std::vector<std::set<long>> classes_;
  bool has_rest_;
  std::string label_;
};

struct HallSetMember {
  size_t class_index;
  Subgroup subgroup;
};

/// A complete Hall sigma-set: one Hall subgroup per class meeting pi(G),
/// members sorted by ascending class index. The product of member orders is
/// |G|; the trivial group gets the empty set.
struct HallSet {
  std::vector<HallSetMember> members;
};

/// The classes meeting pi(G), each with the primes it contributes, in
/// ascending class order. Throws a configuration error if some prime of G is
/// uncovered (possible only without a rest class).
inline std::vector<std::pair<size_t, std::set<long>>> relevant_classes(
    const Group& G, const SigmaPartition& sigma) {
  std::vector<std::pair<size_t, std::set<long>>> out;
  for (long p : G.primes()) {
    size_t c = sigma.class_of(p);
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto& e) { return e.first == c; });
    if (it == out.end())
      out.push_back({c, {p}});
    else
      it->second.insert(p);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// Streams every complete Hall sigma-set of G in canonical order (odometer
/// over per-class Hall subgroup lists, each in lattice order). The callback
/// returns false to stop early. Returns the number of sets enumerated.
inline long for_each_complete_hall_set(const Group& G, const SigmaPartition& sigma,
                                       const std::function<bool(const HallSet&)>& fn) {
  auto rel = relevant_classes(G, sigma);
  std::vector<std::vector<Subgroup>> lists;
  for (const auto& [cls, primes] : rel) {
    lists.push_back(hall(G, primes));
    if (lists.back().empty()) return 0;  // no complete set exists
  }
  long cap = G.limits().max_hall_sets;
  long count = 0;
  std::vector<size_t> odo(lists.size(), 0);
  while (true) {
    if (count >= cap)
      throw resource_limit_error("complete Hall set count", cap, count + 1);
    HallSet hs;
    for (size_t i = 0; i < lists.size(); ++i)
      hs.members.push_back({rel[i].first, lists[i][odo[i]]});
    ++count;
    if (!fn(hs)) return count;
    size_t k = lists.size();
    while (k > 0 && ++odo[k - 1] == lists[k - 1].size()) odo[--k] = 0;
    if (k == 0) break;  // odometer wrapped (or there were no classes at all)
  }
  return count;
}

inline std::vector<HallSet> complete_hall_sigma_sets(const Group& G,
                                                     const SigmaPartition& sigma) {
  std::vector<HallSet> out;
  for_each_complete_hall_set(G, sigma, [&](const HallSet& hs) {
    out.push_back(hs);
    return true;
  });
  return out;
}

/// First non-permutable pair of members, as member positions, if any.
inline std::optional<std::pair<size_t, size_t>> sigma_basis_violation(const HallSet& hs) {
  for (size_t i = 0; i < hs.members.size(); ++i)
    for (size_t j = i + 1; j < hs.members.size(); ++j)
      if (!permutable(hs.members[i].subgroup, hs.members[j].subgroup))
        return std::make_pair(i, j);
  return std::nullopt;
}

/// Every two members permute.
inline bool is_sigma_basis(const HallSet& hs) {
  return !sigma_basis_violation(hs).has_value();
}

inline HallSet conjugate_hall_set(const HallSet& hs, int g) {
  HallSet out;
  for (const auto& m : hs.members)
    out.members.push_back({m.class_index, conjugate_subgroup(m.subgroup, g)});
  return out;
}

struct BasisViolation {
  long set_number = 0;  // 1-based position in enumeration order
  size_t member_a = 0, member_b = 0;
  size_t class_a = 0, class_b = 0;
  Subgroup subgroup_a, subgroup_b;
};

/// Full evaluation of the defining condition of the class h_sigma: G is
/// soluble and every complete Hall sigma-set is a sigma-basis.
struct DefinitionalResult {
  bool soluble = false;
  long set_count = 0;
  long basis_count = 0;
  std::optional<BasisViolation> violation;  // first one, if any
  bool in_class = false;
};

inline DefinitionalResult in_h_sigma_definitional_analysis(const Group& G,
                                                           const SigmaPartition& sigma,
                                                           bool stop_at_first_violation = false) {
  DefinitionalResult r;
  r.soluble = is_soluble(G);
  long seen = 0;
  r.set_count = for_each_complete_hall_set(G, sigma, [&](const HallSet& hs) {
    ++seen;
    auto v = sigma_basis_violation(hs);
    if (!v) {
      ++r.basis_count;
      return true;
    }
    if (!r.violation) {
      r.violation = BasisViolation{seen,
                                   v->first,
                                   v->second,
                                   hs.members[v->first].class_index,
                                   hs.members[v->second].class_index,
                                   hs.members[v->first].subgroup,
                                   hs.members[v->second].subgroup};
    }
    return !stop_at_first_violation;
  });
  r.in_class = r.soluble && r.basis_count == r.set_count;
  return r;
}

inline bool in_h_sigma_definitional(const Group& G, const SigmaPartition& sigma) {
  if (!is_soluble(G)) return false;
  bool all_bases = true;
  for_each_complete_hall_set(G, sigma, [&](const HallSet& hs) {
    if (!is_sigma_basis(hs)) {
      all_bases = false;
      return false;
    }
    return true;
  });
  return all_bases;
}

/// One chief factor checked against the induced-automorphism condition: with
/// factor prime p and A = G/C_G(H/K), the factor passes when A is trivial,
/// or pi(A) lies inside a single class not containing p, or pi(A) lies
/// inside the union of the class of p and at most one other class (a class
/// distinct from p's must exist for the degenerate pi(A) subset-of class(p)
/// case).
struct ChiefCriterionCheck {
  size_t factor_index = 0;
  long factor_order = 0;
  long prime = 0;
  long induced_aut_order = 0;
  std::set<long> aut_primes;
  bool passes = false;
};

struct ChiefCriterionResult {
  bool soluble = false;
  std::vector<ChiefCriterionCheck> checks;
  std::optional<size_t> first_failure;  // index into checks
  bool in_class = false;
};

inline ChiefCriterionResult in_h_sigma_chief_criterion_analysis(const Group& G,
                                                                const SigmaPartition& sigma) {
  ChiefCriterionResult r;
  r.soluble = is_soluble(G);
  if (!r.soluble) return r;
  const auto& series = chief_series(G);
  for (size_t fi = 0; fi < series.factors.size(); ++fi) {
    const auto& f = series.factors[fi];
    ChiefCriterionCheck c;
    c.factor_index = fi;
    c.factor_order = f.order;
    c.prime = prime_power_base(f.order);
    c.induced_aut_order = f.induced_aut_order;
    c.aut_primes = prime_divisors(f.induced_aut_order);

    size_t cp = sigma.class_of(c.prime);
    std::set<size_t> aut_classes;
    for (long q : c.aut_primes) aut_classes.insert(sigma.class_of(q));

    if (aut_classes.empty()) {
      c.passes = true;  // trivial induced group
    } else if (aut_classes.size() == 1 && *aut_classes.begin() != cp) {
      c.passes = true;  // pi(A) inside one class avoiding p
    } else {
      // pi(A) inside class(p) plus at most one other class, and sigma must
      // actually have a second class to play the other role.
      aut_classes.erase(cp);
      c.passes = aut_classes.size() <= 1 && sigma.class_count() >= 2;
    }
    if (!c.passes && !r.first_failure) r.first_failure = fi;
    r.checks.push_back(std::move(c));
  }
  r.in_class = !r.first_failure.has_value();
  return r;
}

inline bool in_h_sigma_chief_criterion(const Group& G, const SigmaPartition& sigma) {
  auto r = in_h_sigma_chief_criterion_analysis(G, sigma);
  return r.soluble && r.in_class;
}

/// The right side of the Sylow-basis criterion, stated independently of the
/// class machinery: every chief factor's induced automorphism group has
/// order divisible by at most one prime different from the factor prime.
inline bool sylow_basis_chief_criterion(const Group& G) {
  if (!is_soluble(G)) return false;
  for (const auto& f : chief_series(G).factors) {
    long p = prime_power_base(f.order);
    auto aut_primes = prime_divisors(f.induced_aut_order);
    aut_primes.erase(p);
    if (aut_primes.size() > 1) return false;
  }
  return true;
}

enum class MaximalScope {
  noncyclic_members,  // maximal-subgroup condition applies to non-cyclic members only
  all_members,        // ... to every member
};

/// Hypothesis of the supersolubility criterion for one complete Hall
/// sigma-set: every member is supersoluble, and every maximal subgroup of
/// each member in scope permutes with every other member.
inline bool maximal_permutability_hypothesis(const HallSet& hs, MaximalScope scope) {
  for (const auto& m : hs.members)
    if (!is_supersoluble(m.subgroup.as_group())) return false;
  for (size_t i = 0; i < hs.members.size(); ++i) {
    const Subgroup& Hi = hs.members[i].subgroup;
    if (scope == MaximalScope::noncyclic_members && is_cyclic_subgroup(Hi)) continue;
    for (const auto& M : maximal_subgroups_of(Hi)) {
      for (size_t j = 0; j < hs.members.size(); ++j) {
        if (j == i) continue;
        if (!permutable(M, hs.members[j].subgroup)) return false;
      }
    }
  }
  return true;
}

}  // namespace hallcheck
