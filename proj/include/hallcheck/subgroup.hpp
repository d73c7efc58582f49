#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hallcheck/group.hpp"

namespace hallcheck {

namespace detail {

// Closure of the identity under right multiplication by the given element
// indices; this is exactly the subgroup those elements generate.
inline IndexMask closure_by_generators(const Group& G,
                                       const std::vector<std::uint16_t>& gens) {
  IndexMask mask(static_cast<size_t>(G.order()));
  std::vector<std::uint16_t> queue;
  mask.set(0);
  queue.push_back(0);
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (auto g : gens) {
      int y = G.mul(x, g);
      if (!mask.test(static_cast<size_t>(y))) {
        mask.set(static_cast<size_t>(y));
        queue.push_back(static_cast<std::uint16_t>(y));
      }
    }
  }
  return mask;
}

}  // namespace detail

/// An arbitrary subset of one parent group's elements, by index.
class ElementSet {
public:
  static ElementSet from_indices(Group parent, std::vector<std::uint16_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (!indices.empty() && indices.back() >= parent.order())
      throw structural_error("element index out of range for parent group");
    detail::IndexMask mask(static_cast<size_t>(parent.order()));
    for (auto i : indices) mask.set(i);
    return ElementSet(std::move(parent), std::move(mask), std::move(indices));
  }

  static ElementSet from_mask(Group parent, detail::IndexMask mask) {
    if (mask.universe() != static_cast<size_t>(parent.order()))
      throw structural_error("mask universe does not match parent order");
    auto indices = mask.indices();
    return ElementSet(std::move(parent), std::move(mask), std::move(indices));
  }

  const Group& parent() const { return parent_; }
  long size() const { return static_cast<long>(indices_.size()); }
  const std::vector<std::uint16_t>& indices() const { return indices_; }
  const detail::IndexMask& mask() const { return mask_; }

  bool contains_index(long i) const { return mask_.test(static_cast<size_t>(i)); }
  bool contains(const Perm& p) const {
    long i = parent_.index_of(p);
    return i >= 0 && contains_index(i);
  }

  std::vector<Perm> elements() const {
    std::vector<Perm> out;
    out.reserve(indices_.size());
    for (auto i : indices_) out.push_back(parent_.element(i));
    return out;
  }

  /// Order-independent set hash, comparable across subsets of groups with
  /// the same degree.
  std::uint64_t fingerprint() const {
    std::uint64_t h = 0;
    for (auto i : indices_) h += parent_.element_hash(i);
    return h;
  }

  bool subset_of(const ElementSet& other) const {
    require_same_parent(other);
    return mask_.subset_of(other.mask_);
  }

  /// Closure under multiplication; for a finite subset this is the subgroup
  /// criterion.
  bool is_closed() const {
    for (auto a : indices_)
      for (auto b : indices_)
        if (!mask_.test(static_cast<size_t>(parent_.mul(a, b)))) return false;
    return !indices_.empty();
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.parent_.same_group(b.parent_) && a.mask_ == b.mask_;
  }

  void require_same_parent(const ElementSet& other) const {
    if (!parent_.same_group(other.parent_))
      throw structural_error("operands live in different parent groups");
  }

private:
  ElementSet(Group parent, detail::IndexMask mask, std::vector<std::uint16_t> indices)
      : parent_(std::move(parent)), mask_(std::move(mask)), indices_(std::move(indices)) {}

  Group parent_;
  detail::IndexMask mask_;
  std::vector<std::uint16_t> indices_;
};

/// A subgroup of a parent group. Instances are always closed: the checked
/// constructors verify closure, the trusted one is for internal results that
/// are closed by construction (intersections, conjugates, closures).
class Subgroup {
public:
  static Subgroup from_indices(Group parent, std::vector<std::uint16_t> indices) {
    auto set = ElementSet::from_indices(std::move(parent), std::move(indices));
    if (!set.is_closed())
      throw structural_error("element set is not a subgroup (not closed)");
    return Subgroup(std::move(set));
  }

  static Subgroup from_mask(Group parent, detail::IndexMask mask) {
    auto set = ElementSet::from_mask(std::move(parent), std::move(mask));
    if (!set.is_closed())
      throw structural_error("element set is not a subgroup (not closed)");
    return Subgroup(std::move(set));
  }

  // Internal: caller guarantees closure.
  static Subgroup trusted(Group parent, detail::IndexMask mask) {
    return Subgroup(ElementSet::from_mask(std::move(parent), std::move(mask)));
  }

  static Subgroup generated(const Group& parent, const std::vector<std::uint16_t>& gens) {
    for (auto g : gens)
      if (g >= parent.order())
        throw structural_error("generator index out of range for parent group");
    return trusted(parent, detail::closure_by_generators(parent, gens));
  }

  static Subgroup generated_by_perms(const Group& parent, const std::vector<Perm>& gens) {
    std::vector<std::uint16_t> idx;
    idx.reserve(gens.size());
    for (const auto& g : gens) {
      long i = parent.index_of(g);
      if (i < 0) throw structural_error("generator is not an element of the parent group");
      idx.push_back(static_cast<std::uint16_t>(i));
    }
    return generated(parent, idx);
  }

  static Subgroup trivial(const Group& parent) { return generated(parent, {}); }

  static Subgroup whole(const Group& parent) {
    detail::IndexMask mask(static_cast<size_t>(parent.order()));
    for (long i = 0; i < parent.order(); ++i) mask.set(static_cast<size_t>(i));
    return trusted(parent, std::move(mask));
  }

  const Group& parent() const { return set_.parent(); }
  long order() const { return set_.size(); }
  const std::vector<std::uint16_t>& indices() const { return set_.indices(); }
  const detail::IndexMask& mask() const { return set_.mask(); }
  const ElementSet& as_set() const { return set_; }
  std::uint64_t fingerprint() const {
    if (!fingerprint_) fingerprint_ = set_.fingerprint();
    return fingerprint_;
  }

  bool contains_index(long i) const { return set_.contains_index(i); }
  bool contains(const Perm& p) const { return set_.contains(p); }
  std::vector<Perm> elements() const { return set_.elements(); }

  bool subset_of(const Subgroup& other) const { return set_.subset_of(other.set_); }
  bool is_whole() const { return order() == parent().order(); }
  bool is_trivial() const { return order() == 1; }

  /// Normal in the parent group: invariant under conjugation by the parent's
  /// generators.
  bool is_normal() const {
    const Group& G = parent();
    for (const auto& gp : G.generators()) {
      int g = static_cast<int>(G.index_of(gp));
      for (auto a : indices())
        if (!contains_index(G.conj(a, g))) return false;
    }
    return true;
  }

  /// This subgroup as a standalone Group over the same points. Results are
  /// memoized on the parent so repeated calls share lattice/series caches;
  /// the whole subgroup returns the parent handle itself.
  Group as_group() const {
    const Group& G = parent();
    if (is_whole()) return G;
    const auto& d = G.data();
    std::lock_guard<std::mutex> lock(d.memo_mutex);
    auto& bucket = d.subgroup_group_memo[fingerprint()];
    for (const auto& [m, data] : bucket)
      if (m == mask()) return Group::wrap(data);
    Group built = Group::from_elements(G.degree(), elements(), small_generating_perms(),
                                       G.limits());
    bucket.emplace_back(mask(), built.data_ptr());
    return built;
  }

  /// Greedy small generating set (element indices in the parent).
  std::vector<std::uint16_t> small_generators() const {
    std::vector<std::uint16_t> gens;
    detail::IndexMask covered(static_cast<size_t>(parent().order()));
    covered.set(0);
    for (auto i : indices()) {
      if (covered.test(i)) continue;
      gens.push_back(i);
      covered = detail::closure_by_generators(parent(), gens);
    }
    return gens;
  }

  std::vector<Perm> small_generating_perms() const {
    std::vector<Perm> out;
    for (auto i : small_generators()) out.push_back(parent().element(i));
    return out;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.set_ == b.set_;
  }

private:
  explicit Subgroup(ElementSet set) : set_(std::move(set)) {}

  ElementSet set_;
  mutable std::uint64_t fingerprint_ = 0;
};

/// Cyclic test that never builds a standalone group: some element of H has
/// order |H|.
inline bool is_cyclic_subgroup(const Subgroup& H) {
  for (auto i : H.indices())
    if (H.parent().element_order(i) == H.order()) return true;
  return false;
}

/// The product set AB = {ab : a in A, b in B}; a subgroup exactly when A and
/// B permute.
inline ElementSet product_set(const Subgroup& A, const Subgroup& B) {
  A.as_set().require_same_parent(B.as_set());
  const Group& G = A.parent();
  detail::IndexMask mask(static_cast<size_t>(G.order()));
  for (auto a : A.indices())
    for (auto b : B.indices()) mask.set(static_cast<size_t>(G.mul(a, b)));
  return ElementSet::from_mask(G, std::move(mask));
}

/// AB == BA. Since |AB| = |BA| always, it is enough to check BA is contained
/// in AB, which allows an early exit.
inline bool permutable(const Subgroup& A, const Subgroup& B) {
  A.as_set().require_same_parent(B.as_set());
  const Group& G = A.parent();
  detail::IndexMask ab(static_cast<size_t>(G.order()));
  for (auto a : A.indices())
    for (auto b : B.indices()) ab.set(static_cast<size_t>(G.mul(a, b)));
  for (auto b : B.indices())
    for (auto a : A.indices())
      if (!ab.test(static_cast<size_t>(G.mul(b, a)))) return false;
  return true;
}

inline Subgroup intersection(const Subgroup& A, const Subgroup& B) {
  A.as_set().require_same_parent(B.as_set());
  return Subgroup::trusted(A.parent(), A.mask() & B.mask());
}

/// Smallest subgroup containing both A and B.
inline Subgroup join(const Subgroup& A, const Subgroup& B) {
  A.as_set().require_same_parent(B.as_set());
  std::vector<std::uint16_t> gens;
  for (auto i : A.small_generators()) gens.push_back(i);
  for (auto i : B.small_generators()) gens.push_back(i);
  return Subgroup::generated(A.parent(), gens);
}

/// A^g = g^-1 A g; g must be an element of the parent group.
inline Subgroup conjugate_subgroup(const Subgroup& A, int g) {
  const Group& G = A.parent();
  detail::IndexMask mask(static_cast<size_t>(G.order()));
  for (auto a : A.indices()) mask.set(static_cast<size_t>(G.conj(a, g)));
  return Subgroup::trusted(G, std::move(mask));
}

inline Subgroup conjugate_subgroup(const Subgroup& A, const Perm& g) {
  long gi = A.parent().index_of(g);
  if (gi < 0) throw structural_error("conjugating element is not in the parent group");
  return conjugate_subgroup(A, static_cast<int>(gi));
}

/// Elements of G commuting with every element of S.
inline Subgroup centralizer(const Group& G, const std::vector<std::uint16_t>& S) {
  detail::IndexMask mask(static_cast<size_t>(G.order()));
  for (long g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto s : S) {
      if (G.mul(static_cast<int>(g), s) != G.mul(s, static_cast<int>(g))) {
        ok = false;
        break;
      }
    }
    if (ok) mask.set(static_cast<size_t>(g));
  }
  return Subgroup::trusted(G, std::move(mask));
}

inline Subgroup centralizer(const Group& G, const std::vector<Perm>& S) {
  std::vector<std::uint16_t> idx;
  for (const auto& p : S) {
    long i = G.index_of(p);
    if (i < 0) throw structural_error("centralized element is not in the group");
    idx.push_back(static_cast<std::uint16_t>(i));
  }
  return centralizer(G, idx);
}

/// Elements g of G with A^g = A.
inline Subgroup normalizer(const Group& G, const Subgroup& A) {
  if (!A.parent().same_group(G))
    throw structural_error("operands live in different parent groups");
  detail::IndexMask mask(static_cast<size_t>(G.order()));
  for (long g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto a : A.indices()) {
      if (!A.contains_index(G.conj(a, static_cast<int>(g)))) {
        ok = false;
        break;
      }
    }
    if (ok) mask.set(static_cast<size_t>(g));
  }
  return Subgroup::trusted(G, std::move(mask));
}

/// Smallest normal subgroup of G containing A.
inline Subgroup normal_closure(const Group& G, const Subgroup& A) {
  if (!A.parent().same_group(G))
    throw structural_error("operands live in different parent groups");
  std::vector<std::uint16_t> gen_indices;
  for (const auto& gp : G.generators()) {
    long i = G.index_of(gp);
    if (i >= 0) gen_indices.push_back(static_cast<std::uint16_t>(i));
  }
  std::vector<std::uint16_t> gens = A.small_generators();
  detail::IndexMask closure = detail::closure_by_generators(G, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto n : closure.indices()) {
      for (auto g : gen_indices) {
        int c = G.conj(n, g);
        if (!closure.test(static_cast<size_t>(c))) {
          gens.push_back(static_cast<std::uint16_t>(c));
          closure = detail::closure_by_generators(G, gens);
          grew = true;
        }
      }
    }
  }
  return Subgroup::trusted(G, std::move(closure));
}

}  // namespace hallcheck
