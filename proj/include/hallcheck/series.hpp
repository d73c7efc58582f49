#pragma once

#include <random>

#include "hallcheck/lattice.hpp"

namespace hallcheck {

/// The quotient G/N realized as a permutation group on the left cosets of N
/// (left multiplication action). Cosets are numbered by ascending least
/// representative, which makes the construction canonical.
struct QuotientMap {
  Group source;
  Subgroup kernel;
  Group quotient;
  std::vector<std::uint16_t> image_index;  // source element index -> quotient element index

  int image_of_index(int i) const { return image_index[static_cast<size_t>(i)]; }

  Perm image(const Perm& p) const {
    long i = source.index_of(p);
    if (i < 0) throw structural_error("element is not in the source group");
    return quotient.element(image_of_index(static_cast<int>(i)));
  }
};

inline QuotientMap quotient(const Group& G, const Subgroup& N) {
  if (!N.parent().same_group(G))
    throw structural_error("kernel belongs to a different parent group");
  if (!N.is_normal()) throw structural_error("quotient kernel is not normal");

  long m = G.order() / N.order();
  std::vector<int> coset_of(static_cast<size_t>(G.order()), -1);
  std::vector<int> rep_of;  // coset -> least representative
  for (long e = 0; e < G.order(); ++e) {
    if (coset_of[static_cast<size_t>(e)] >= 0) continue;
    int c = static_cast<int>(rep_of.size());
    rep_of.push_back(static_cast<int>(e));
    for (auto n : N.indices())
      coset_of[static_cast<size_t>(G.mul(static_cast<int>(e), n))] = c;
  }
  assert(static_cast<long>(rep_of.size()) == m);

  // The quotient's degree is the coset count; the degree cap is relaxed to
  // that (a quotient never acts on more points than its source has elements).
  Limits qlimits = G.limits();
  qlimits.max_degree = std::max<int>(qlimits.max_degree, static_cast<int>(m));

  auto action_of = [&](int e) {
    std::vector<std::uint16_t> images(static_cast<size_t>(m));
    for (long c = 0; c < m; ++c)
      images[static_cast<size_t>(c)] = static_cast<std::uint16_t>(
          coset_of[static_cast<size_t>(G.mul(e, rep_of[static_cast<size_t>(c)]))]);
    return Perm::from_images(std::move(images));
  };

  std::vector<Perm> quotient_elements;
  quotient_elements.reserve(static_cast<size_t>(m));
  for (long c = 0; c < m; ++c) quotient_elements.push_back(action_of(rep_of[static_cast<size_t>(c)]));
  std::vector<Perm> quotient_generators;
  for (const auto& gp : G.generators()) {
    long gi = G.index_of(gp);
    if (gi >= 0) quotient_generators.push_back(action_of(static_cast<int>(gi)));
  }

  QuotientMap qm{G, N,
                 Group::from_elements(static_cast<int>(m), std::move(quotient_elements),
                                      std::move(quotient_generators), qlimits),
                 {}};
  qm.image_index.resize(static_cast<size_t>(G.order()));
  for (long e = 0; e < G.order(); ++e) {
    long qi = qm.quotient.index_of(action_of(static_cast<int>(e)));
    assert(qi >= 0);
    qm.image_index[static_cast<size_t>(e)] = static_cast<std::uint16_t>(qi);
  }
  return qm;
}

/// One factor H/K of a chief series: K < H, both normal in G, with nothing
/// normal strictly between.
struct ChiefFactor {
  Subgroup below;            // K
  Subgroup above;            // H
  long order = 0;            // |H| / |K|
  std::set<long> primes;     // prime divisors of the factor order
  long centralizer_order = 0;  // |C_G(H/K)|
  long induced_aut_order = 0;  // |G / C_G(H/K)|
};

struct ChiefSeries {
  std::vector<ChiefFactor> factors;  // bottom-up: factors[0].below is trivial
};

/// |C_G(H/K)|: elements g with [h, g] in K for every h in H.
inline Subgroup chief_factor_centralizer(const Group& G, const Subgroup& H,
                                         const Subgroup& K) {
  detail::IndexMask mask(static_cast<size_t>(G.order()));
  for (long g = 0; g < G.order(); ++g) {
    bool central = true;
    int gi = static_cast<int>(g);
    int gv = G.inv(gi);
    for (auto h : H.indices()) {
      // [h, g] = h^-1 g^-1 h g
      int c = G.mul(G.mul(G.mul(G.inv(h), gv), h), gi);
      if (!K.contains_index(c)) {
        central = false;
        break;
      }
    }
    if (central) mask.set(static_cast<size_t>(g));
  }
  return Subgroup::trusted(G, std::move(mask));
}

namespace detail {

inline ChiefSeries build_chief_series(const Group& G, std::optional<std::uint64_t> seed) {
  const auto& lat = all_subgroups(G);
  const auto& normals = lat.normal_indices();
  std::mt19937_64 rng(seed.value_or(0));

  ChiefSeries series;
  Subgroup K = Subgroup::trivial(G);
  while (K.order() < G.order()) {
    // Normals strictly containing K, smallest first (lattice order). The
    // first hit is automatically minimal over K; any candidate of the same
    // order is minimal too, so the tie-break only ever picks among those.
    std::vector<size_t> candidates;
    long best_order = 0;
    for (auto i : normals) {
      const Subgroup& M = lat[i];
      if (M.order() <= K.order()) continue;
      if (!K.mask().subset_of(M.mask())) continue;
      if (candidates.empty()) {
        best_order = M.order();
        candidates.push_back(i);
      } else if (M.order() == best_order) {
        candidates.push_back(i);
      } else {
        break;  // lattice order is ascending; nothing smaller follows
      }
    }
    if (candidates.empty())
      throw structural_error("chief series construction stalled");
    size_t pick = candidates.front();
    if (seed && candidates.size() > 1)
      pick = candidates[static_cast<size_t>(rng() % candidates.size())];

    Subgroup H = Subgroup::trusted(G, lat[pick].mask());
    Subgroup C = chief_factor_centralizer(G, H, K);
    long factor_order = H.order() / K.order();
    series.factors.push_back(ChiefFactor{K, H, factor_order, prime_divisors(factor_order),
                                         C.order(), G.order() / C.order()});
    K = std::move(H);
  }
  return series;
}

}  // namespace detail

/// The canonical chief series (deterministic tie-break: smallest order, then
/// smallest fingerprint), cached on the group. Valid while a handle lives.
inline const ChiefSeries& chief_series(const Group& G) {
  const auto& d = G.data();
  std::call_once(d.series_once, [&] {
    d.series = std::make_shared<const ChiefSeries>(
        detail::build_chief_series(detail::non_owning_handle(d), std::nullopt));
  });
  return *d.series;
}

/// A chief series with randomized tie-breaks among equally small minimal
/// candidates. Different seeds may produce different series; the multiset of
/// (factor order, induced automorphism order) pairs must not change.
inline ChiefSeries chief_series_with_seed(const Group& G, std::uint64_t seed) {
  return detail::build_chief_series(G, seed);
}

// ---- structural classifiers ----

/// Soluble: every chief factor has prime-power order.
inline bool is_soluble(const Group& G) {
  for (const auto& f : chief_series(G).factors)
    if (prime_power_base(f.order) == 0) return false;
  return true;
}

/// Supersoluble: every chief factor has prime order.
inline bool is_supersoluble(const Group& G) {
  for (const auto& f : chief_series(G).factors)
    if (!is_prime(f.order)) return false;
  return true;
}

/// Nilpotent: every Sylow subgroup is normal.
inline bool is_nilpotent(const Group& G) {
  for (long p : G.primes())
    if (!sylow(G, p).is_normal()) return false;
  return true;
}

inline bool is_cyclic(const Group& G) {
  for (long i = 0; i < G.order(); ++i)
    if (G.element_order(i) == G.order()) return true;
  return G.order() == 1;
}

/// p-nilpotent: G has a normal Hall p'-subgroup, i.e. a normal subgroup
/// whose order is the p'-part of |G|.
inline bool is_p_nilpotent(const Group& G, long p) {
  if (!is_prime(p)) throw config_error("is_p_nilpotent: p must be prime");
  long target = G.order() / p_part(G.order(), p);
  const auto& lat = all_subgroups(G);
  for (auto i : lat.normal_indices())
    if (lat[i].order() == target) return true;
  return false;
}

/// O_p(G): the largest normal p-subgroup.
inline Subgroup o_p(const Group& G, long p) {
  if (!is_prime(p)) throw config_error("o_p: p must be prime");
  const auto& lat = all_subgroups(G);
  std::optional<size_t> best;
  for (auto i : lat.normal_indices()) {
    long o = lat[i].order();
    if (o == 1 || o == p_part(o, p)) {
      if (!best || lat[i].order() > lat[*best].order()) best = i;
    }
  }
  return Subgroup::trusted(G, lat[*best].mask());
}

/// Fitting subgroup: the largest normal nilpotent subgroup, computed as the
/// join of the O_p over the primes dividing |G|.
inline Subgroup fitting(const Group& G) {
  Subgroup F = Subgroup::trivial(G);
  for (long p : G.primes()) F = join(F, o_p(G, p));
  return F;
}

}  // namespace hallcheck
