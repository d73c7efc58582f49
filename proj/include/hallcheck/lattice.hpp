#pragma once

#include <optional>
#include <unordered_map>

#include "hallcheck/arith.hpp"
#include "hallcheck/subgroup.hpp"

namespace hallcheck {

namespace detail {

// Greedy minimal-ish generating set for a closed mask: walk indices in
// canonical order, keep an element iff it is not yet generated.
inline std::vector<std::uint16_t> small_generators_of_mask(const Group& G,
                                                           const IndexMask& mask) {
  std::vector<std::uint16_t> gens;
  IndexMask covered(static_cast<size_t>(G.order()));
  covered.set(0);
  for (auto i : mask.indices()) {
    if (covered.test(i)) continue;
    gens.push_back(i);
    covered = closure_by_generators(G, gens);
  }
  return gens;
}

}  // namespace detail

/// The complete list of subgroups of one group, in canonical order
/// (ascending order, then ascending fingerprint), with a small generating
/// set per entry.
///
/// Construction: seed with every cyclic subgroup, then close the list under
/// pairwise joins until stable. Every subgroup is a join of the cyclic
/// subgroups it contains, so the closure reaches everything.
class SubgroupLattice {
public:
  static SubgroupLattice build(const Group& G) {
    long cap = G.limits().max_subgroups;
    std::vector<detail::IndexMask> masks;
    std::vector<std::vector<std::uint16_t>> gens;
    std::vector<std::uint64_t> fps;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_fp;

    auto fingerprint_of = [&](const detail::IndexMask& m) {
      std::uint64_t h = 0;
      for (auto i : m.indices()) h += G.element_hash(i);
      return h;
    };
    auto try_insert = [&](detail::IndexMask m) -> bool {
      std::uint64_t fp = fingerprint_of(m);
      auto& bucket = by_fp[fp];
      for (auto idx : bucket)
        if (masks[idx] == m) return false;
      if (static_cast<long>(masks.size()) >= cap)
        throw resource_limit_error("subgroup count", cap,
                                   static_cast<long>(masks.size()) + 1);
      bucket.push_back(static_cast<std::uint32_t>(masks.size()));
      gens.push_back(detail::small_generators_of_mask(G, m));
      fps.push_back(fp);
      masks.push_back(std::move(m));
      return true;
    };

    // Trivial and cyclic subgroups.
    {
      detail::IndexMask triv(static_cast<size_t>(G.order()));
      triv.set(0);
      try_insert(std::move(triv));
    }
    for (long e = 1; e < G.order(); ++e)
      try_insert(detail::closure_by_generators(
          G, {static_cast<std::uint16_t>(e)}));

    // Pairwise join closure. New entries are appended and later paired with
    // everything below them, so all pairs get considered.
    for (size_t i = 1; i < masks.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        if (masks[j].subset_of(masks[i]) || masks[i].subset_of(masks[j])) continue;
        std::vector<std::uint16_t> jg = gens[i];
        jg.insert(jg.end(), gens[j].begin(), gens[j].end());
        try_insert(detail::closure_by_generators(G, jg));
      }
    }

    SubgroupLattice lat;
    lat.parent_ = G;
    std::vector<std::uint32_t> perm(masks.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::vector<size_t> counts(masks.size());
    for (size_t i = 0; i < masks.size(); ++i) counts[i] = masks[i].count();
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t x, std::uint32_t y) {
      if (counts[x] != counts[y]) return counts[x] < counts[y];
      return fps[x] < fps[y];
    });
    for (auto idx : perm) {
      lat.by_fp_[fps[idx]].push_back(static_cast<std::uint32_t>(lat.subs_.size()));
      lat.subs_.push_back(Subgroup::trusted(G, std::move(masks[idx])));
      lat.gens_.push_back(std::move(gens[idx]));
    }
    lat.compute_maximal();
    lat.compute_normal();
    return lat;
  }

  const Group& parent() const { return parent_; }
  size_t size() const { return subs_.size(); }
  const Subgroup& operator[](size_t i) const { return subs_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subs_; }
  const std::vector<std::uint16_t>& generators_of(size_t i) const { return gens_[i]; }

  size_t trivial_index() const { return 0; }
  size_t whole_index() const { return subs_.size() - 1; }

  /// subs[i] contained in subs[j].
  bool leq(size_t i, size_t j) const { return subs_[i].mask().subset_of(subs_[j].mask()); }

  std::optional<size_t> find(const Subgroup& H) const {
    if (!H.parent().same_group(parent_))
      throw structural_error("subgroup belongs to a different parent group");
    auto it = by_fp_.find(H.fingerprint());
    if (it == by_fp_.end()) return std::nullopt;
    for (auto idx : it->second)
      if (subs_[idx].mask() == H.mask()) return idx;
    return std::nullopt;
  }

  const std::vector<size_t>& maximal_indices() const { return maximal_; }
  const std::vector<size_t>& normal_indices() const { return normal_; }

  std::vector<size_t> indices_of_order(long n) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < subs_.size(); ++i)
      if (subs_[i].order() == n) out.push_back(i);
    return out;
  }

private:
  void compute_maximal() {
    long gorder = parent_.order();
    for (size_t i = 0; i + 1 < subs_.size(); ++i) {
      long oi = subs_[i].order();
      if (gorder % oi != 0) continue;  // cannot happen; cheap guard
      bool covered = false;
      for (size_t j = i + 1; j + 1 < subs_.size() && !covered; ++j) {
        long oj = subs_[j].order();
        if (oj <= oi || oj % oi != 0) continue;
        covered = leq(i, j);
      }
      if (!covered && subs_.size() > 1) maximal_.push_back(i);
    }
  }

  void compute_normal() {
    std::vector<std::uint16_t> gen_idx;
    for (const auto& gp : parent_.generators()) {
      long k = parent_.index_of(gp);
      if (k >= 0) gen_idx.push_back(static_cast<std::uint16_t>(k));
    }
    for (size_t i = 0; i < subs_.size(); ++i) {
      bool normal = true;
      for (auto g : gen_idx) {
        for (auto a : subs_[i].indices()) {
          if (!subs_[i].contains_index(parent_.conj(a, g))) {
            normal = false;
            break;
          }
        }
        if (!normal) break;
      }
      if (normal) normal_.push_back(i);
    }
  }

  Group parent_;
  std::vector<Subgroup> subs_;
  std::vector<std::vector<std::uint16_t>> gens_;
  std::vector<size_t> maximal_;
  std::vector<size_t> normal_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_fp_;
};

/// The lattice, computed once per group and cached on its shared state. The
/// reference stays valid as long as some handle to the group is alive.
inline const SubgroupLattice& all_subgroups(const Group& G) {
  const auto& d = G.data();
  std::call_once(d.lattice_once, [&] {
    // Built over a non-owning handle; the cache lives inside the group data
    // it points back to, so an owning handle would never be freed.
    d.lattice = std::make_shared<const SubgroupLattice>(
        SubgroupLattice::build(detail::non_owning_handle(d)));
  });
  return *d.lattice;
}

inline std::vector<Subgroup> maximal_subgroups(const Group& G) {
  const auto& lat = all_subgroups(G);
  std::vector<Subgroup> out;
  for (auto i : lat.maximal_indices()) out.push_back(Subgroup::trusted(G, lat[i].mask()));
  return out;
}

/// Maximal subgroups of H, returned as subgroups of H's parent. Computed on
/// H as a standalone group (same points), then translated back by element.
inline std::vector<Subgroup> maximal_subgroups_of(const Subgroup& H) {
  const Group& G = H.parent();
  Group Hs = H.as_group();
  if (Hs.same_group(G)) return maximal_subgroups(G);
  std::vector<Subgroup> out;
  for (const auto& M : maximal_subgroups(Hs)) {
    detail::IndexMask mask(static_cast<size_t>(G.order()));
    for (const auto& p : M.elements()) {
      long i = G.index_of(p);
      assert(i >= 0);
      mask.set(static_cast<size_t>(i));
    }
    out.push_back(Subgroup::trusted(G, std::move(mask)));
  }
  return out;
}

/// Intersection of all maximal subgroups (the whole group if there are none,
/// which only happens for the trivial group).
inline Subgroup frattini(const Group& G) {
  const auto& lat = all_subgroups(G);
  if (lat.maximal_indices().empty()) return Subgroup::whole(G);
  detail::IndexMask m = lat[lat.maximal_indices().front()].mask();
  for (auto i : lat.maximal_indices()) m &= lat[i].mask();
  return Subgroup::trusted(G, std::move(m));
}

inline std::vector<Subgroup> normal_subgroups(const Group& G) {
  const auto& lat = all_subgroups(G);
  std::vector<Subgroup> out;
  for (auto i : lat.normal_indices()) out.push_back(Subgroup::trusted(G, lat[i].mask()));
  return out;
}

inline std::vector<Subgroup> minimal_normal_subgroups(const Group& G) {
  const auto& lat = all_subgroups(G);
  const auto& normals = lat.normal_indices();
  std::vector<Subgroup> out;
  for (auto i : normals) {
    if (lat[i].is_trivial()) continue;
    bool minimal = true;
    for (auto j : normals) {
      if (j == i || lat[j].is_trivial()) continue;
      if (lat[j].order() < lat[i].order() && lat.leq(j, i)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(Subgroup::trusted(G, lat[i].mask()));
  }
  return out;
}

/// One Sylow p-subgroup, found by normalizer climbing: grow a p-subgroup P
/// by adjoining an element of p-power order from N_G(P) \ P until the full
/// p-part is reached. This never touches the lattice, so it doubles as an
/// independent cross-check of lattice-filtered Sylow subgroups.
inline Subgroup sylow(const Group& G, long p) {
  if (!is_prime(p)) throw config_error("sylow: " + std::to_string(p) + " is not prime");
  long target = p_part(G.order(), p);
  std::vector<std::uint16_t> gens;
  Subgroup P = Subgroup::generated(G, gens);
  while (P.order() < target) {
    Subgroup N = normalizer(G, P);
    bool extended = false;
    for (auto x : N.indices()) {
      if (P.contains_index(x)) continue;
      long ord = G.element_order(x);
      if (p_part(ord, p) != ord) continue;  // not p-power order
      gens.push_back(x);
      P = Subgroup::generated(G, gens);
      extended = true;
      break;
    }
    if (!extended)
      throw structural_error("sylow climb stalled; group data is inconsistent");
  }
  return P;
}

/// All Sylow p-subgroups: the conjugation orbit of sylow(G, p), sorted by
/// fingerprint.
inline std::vector<Subgroup> all_sylow(const Group& G, long p) {
  std::vector<Subgroup> orbit{sylow(G, p)};
  std::vector<std::uint16_t> gen_idx;
  for (const auto& gp : G.generators()) {
    long k = G.index_of(gp);
    if (k >= 0) gen_idx.push_back(static_cast<std::uint16_t>(k));
  }
  std::unordered_map<std::uint64_t, std::vector<size_t>> seen;
  seen[orbit[0].fingerprint()].push_back(0);
  for (size_t head = 0; head < orbit.size(); ++head) {
    for (auto g : gen_idx) {
      Subgroup C = conjugate_subgroup(orbit[head], static_cast<int>(g));
      auto& bucket = seen[C.fingerprint()];
      bool known = false;
      for (auto idx : bucket)
        if (orbit[idx].mask() == C.mask()) {
          known = true;
          break;
        }
      if (!known) {
        bucket.push_back(orbit.size());
        orbit.push_back(std::move(C));
      }
    }
  }
  std::sort(orbit.begin(), orbit.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.fingerprint() < b.fingerprint();
  });
  return orbit;
}

/// All Hall pi-subgroups: subgroups whose order is exactly the pi-part of
/// |G|. May be empty; {G} when pi covers every prime of G.
inline std::vector<Subgroup> hall(const Group& G, const std::set<long>& pi) {
  for (long p : pi)
    if (!is_prime(p)) throw config_error("hall: " + std::to_string(p) + " is not prime");
  long target = pi_part(G.order(), pi);
  const auto& lat = all_subgroups(G);
  std::vector<Subgroup> out;
  for (auto i : lat.indices_of_order(target))
    out.push_back(Subgroup::trusted(G, lat[i].mask()));
  return out;
}

}  // namespace hallcheck
