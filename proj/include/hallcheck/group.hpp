#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hallcheck/arith.hpp"
#include "hallcheck/detail/index_mask.hpp"
#include "hallcheck/errors.hpp"
#include "hallcheck/limits.hpp"
#include "hallcheck/perm.hpp"

namespace hallcheck {

class SubgroupLattice;  // lattice.hpp
struct ChiefSeries;     // series.hpp

namespace detail {

struct GroupData {
  int degree = 0;
  Limits limits;
  std::vector<Perm> generators;

  // Elements in canonical (lexicographic) order. Index 0 is the identity:
  // if a permutation fixes 0..j-1 then its image of j can only be >= j, so
  // the identity is lexicographically minimal.
  std::vector<Perm> elements;
  std::vector<std::uint64_t> element_hashes;
  std::vector<std::uint16_t> inverse_of;
  std::vector<long> element_orders;
  long order = 0;

  // Order-independent set hash; equal element sets over the same degree get
  // equal fingerprints regardless of how they were produced.
  std::uint64_t fingerprint = 0;

  std::set<long> primes;  // prime divisors of the order

  // Dense multiplication table (index of elements[i] * elements[j] at
  // i*order+j) when order <= limits.dense_table_max_order, else empty.
  std::vector<std::uint16_t> table;

  std::unordered_map<std::uint64_t, std::vector<std::uint16_t>> index_by_hash;

  // Lazily built caches, shared by every handle to this group.
  mutable std::once_flag lattice_once;
  mutable std::shared_ptr<const SubgroupLattice> lattice;
  mutable std::once_flag series_once;
  mutable std::shared_ptr<const ChiefSeries> series;
  mutable std::mutex memo_mutex;
  mutable std::unordered_map<std::uint64_t,
                             std::vector<std::pair<IndexMask, std::shared_ptr<const GroupData>>>>
      subgroup_group_memo;

  GroupData() = default;
  GroupData(const GroupData&) = delete;
  GroupData& operator=(const GroupData&) = delete;
};

}  // namespace detail

/// A finite permutation group with fully enumerated elements. Cheap to copy:
/// a Group is a shared handle, and two handles are "the same parent" exactly
/// when they share state.
class Group {
public:
  Group() = default;

  /// Generates the closure of `generators` inside Sym(degree).
  static Group generate(int degree, std::vector<Perm> generators,
                        const Limits& limits = {}) {
    limits.validate();
    if (degree < 1) throw config_error("degree must be positive");
    if (degree > limits.max_degree)
      throw resource_limit_error("degree", limits.max_degree, degree);
    for (const auto& g : generators)
      if (g.degree() != degree)
        throw structural_error("generator degree does not match group degree");

    std::unordered_set<Perm, PermHash> seen;
    std::deque<Perm> queue;
    Perm id(degree);
    seen.insert(id);
    queue.push_back(id);
    for (const auto& g : generators) {
      if (seen.insert(g).second) queue.push_back(g);
    }
    while (!queue.empty()) {
      Perm x = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : generators) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) {
          if (static_cast<long>(seen.size()) > limits.max_order)
            throw resource_limit_error("group order", limits.max_order,
                                       static_cast<long>(seen.size()));
          queue.push_back(std::move(y));
        }
      }
    }
    std::vector<Perm> elements(seen.begin(), seen.end());
    std::sort(elements.begin(), elements.end());
    return wrap(make_data(degree, std::move(elements), std::move(generators), limits));
  }

  /// Builds a group from an already-closed element set. Closure is verified
  /// whenever the dense table is built; callers handing in larger sets are
  /// trusted.
  static Group from_elements(int degree, std::vector<Perm> elements,
                             std::vector<Perm> generators, const Limits& limits = {}) {
    limits.validate();
    if (degree < 1) throw config_error("degree must be positive");
    if (degree > limits.max_degree)
      throw resource_limit_error("degree", limits.max_degree, degree);
    if (static_cast<long>(elements.size()) > limits.max_order)
      throw resource_limit_error("group order", limits.max_order,
                                 static_cast<long>(elements.size()));
    for (const auto& e : elements)
      if (e.degree() != degree)
        throw structural_error("element degree does not match group degree");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || !elements.front().is_identity())
      throw structural_error("element set does not contain the identity");
    return wrap(make_data(degree, std::move(elements), std::move(generators), limits));
  }

  static Group trivial(int degree, const Limits& limits = {}) {
    return generate(degree, {}, limits);
  }

  bool valid() const { return data_ != nullptr; }

  int degree() const { return data().degree; }
  long order() const { return data().order; }
  const Limits& limits() const { return data().limits; }
  const std::vector<Perm>& generators() const { return data().generators; }
  const std::vector<Perm>& elements() const { return data().elements; }
  const Perm& element(long i) const { return data().elements[static_cast<size_t>(i)]; }
  std::uint64_t element_hash(long i) const {
    return data().element_hashes[static_cast<size_t>(i)];
  }
  long element_order(long i) const {
    return data().element_orders[static_cast<size_t>(i)];
  }
  std::uint64_t fingerprint() const { return data().fingerprint; }
  const std::set<long>& primes() const { return data().primes; }
  bool has_dense_table() const { return !data().table.empty(); }
  int identity_index() const { return 0; }

  /// Index of p in canonical element order, or -1 if p is not in the group.
  long index_of(const Perm& p) const {
    if (p.degree() != degree())
      throw structural_error("permutation degree does not match group degree");
    auto it = data().index_by_hash.find(p.hash());
    if (it == data().index_by_hash.end()) return -1;
    for (auto idx : it->second)
      if (data().elements[idx] == p) return idx;
    return -1;
  }

  bool contains(const Perm& p) const {
    return p.degree() == degree() && index_of(p) >= 0;
  }

  int mul(int i, int j) const {
    const auto& d = data();
    if (!d.table.empty())
      return d.table[static_cast<size_t>(i) * static_cast<size_t>(d.order) +
                     static_cast<size_t>(j)];
    long k = index_of(compose(d.elements[static_cast<size_t>(i)],
                              d.elements[static_cast<size_t>(j)]));
    assert(k >= 0);
    return static_cast<int>(k);
  }

  int inv(int i) const { return data().inverse_of[static_cast<size_t>(i)]; }

  /// Index of g^-1 * a * g (conjugation of a by g).
  int conj(int a, int g) const { return mul(mul(inv(g), a), g); }

  /// True when the two handles share state; all subgroup operations require
  /// operands over the same parent in this sense.
  bool same_group(const Group& other) const { return data_ == other.data_; }

  // Internal: wraps shared state into a handle.
  static Group wrap(std::shared_ptr<const detail::GroupData> data) {
    Group g;
    g.data_ = std::move(data);
    return g;
  }

  const detail::GroupData& data() const {
    assert(data_ && "empty Group handle");
    return *data_;
  }
  const std::shared_ptr<const detail::GroupData>& data_ptr() const { return data_; }

private:
  static std::shared_ptr<const detail::GroupData> make_data(int degree,
                                                            std::vector<Perm> elements,
                                                            std::vector<Perm> generators,
                                                            const Limits& limits) {
    auto d = std::make_shared<detail::GroupData>();
    d->degree = degree;
    d->limits = limits;
    d->generators = std::move(generators);
    d->elements = std::move(elements);
    d->order = static_cast<long>(d->elements.size());

    d->element_hashes.reserve(d->elements.size());
    d->element_orders.reserve(d->elements.size());
    for (size_t i = 0; i < d->elements.size(); ++i) {
      std::uint64_t h = d->elements[i].hash();
      d->element_hashes.push_back(h);
      d->fingerprint += h;
      d->element_orders.push_back(d->elements[i].order());
      d->index_by_hash[h].push_back(static_cast<std::uint16_t>(i));
    }
    assert(d->elements[0].is_identity());

    d->inverse_of.resize(d->elements.size());
    for (size_t i = 0; i < d->elements.size(); ++i) {
      long j = lookup(*d, d->elements[i].inverse());
      if (j < 0) throw structural_error("element set is not closed under inversion");
      d->inverse_of[i] = static_cast<std::uint16_t>(j);
    }

    d->primes = prime_divisors(d->order);

    if (d->order <= limits.dense_table_max_order) {
      d->table.resize(static_cast<size_t>(d->order) * static_cast<size_t>(d->order));
      for (long i = 0; i < d->order; ++i) {
        for (long j = 0; j < d->order; ++j) {
          long k = lookup(*d, compose(d->elements[static_cast<size_t>(i)],
                                      d->elements[static_cast<size_t>(j)]));
          if (k < 0)
            throw structural_error("element set is not closed under multiplication");
          d->table[static_cast<size_t>(i) * static_cast<size_t>(d->order) +
                   static_cast<size_t>(j)] = static_cast<std::uint16_t>(k);
        }
      }
    }
    return d;
  }

  static long lookup(const detail::GroupData& d, const Perm& p) {
    auto it = d.index_by_hash.find(p.hash());
    if (it == d.index_by_hash.end()) return -1;
    for (auto idx : it->second)
      if (d.elements[idx] == p) return idx;
    return -1;
  }

  std::shared_ptr<const detail::GroupData> data_;
};

namespace detail {

// Non-owning handle to group state, for caches stored inside GroupData
// itself (a lattice holding owning handles to its own parent would be a
// shared_ptr cycle). Such handles never outlive the data: the cache and the
// data share a lifetime.
inline Group non_owning_handle(const GroupData& d) {
  return Group::wrap(std::shared_ptr<const GroupData>(std::shared_ptr<void>(), &d));
}

}  // namespace detail

/// External direct product acting on the disjoint union of the two point
/// sets. Elements are assembled directly (no closure search), so this is
/// cheap even near the order cap.
inline Group direct_product(const Group& a, const Group& b, const Limits& limits = {}) {
  limits.validate();
  int degree = a.degree() + b.degree();
  if (degree > limits.max_degree)
    throw resource_limit_error("degree", limits.max_degree, degree);
  long order = a.order() * b.order();
  if (order > limits.max_order)
    throw resource_limit_error("group order", limits.max_order, order);

  auto embed = [&](const Perm& pa, const Perm& pb) {
    std::vector<std::uint16_t> images(static_cast<size_t>(degree));
    for (int x = 0; x < a.degree(); ++x)
      images[static_cast<size_t>(x)] = static_cast<std::uint16_t>(pa(x));
    for (int x = 0; x < b.degree(); ++x)
      images[static_cast<size_t>(a.degree() + x)] =
          static_cast<std::uint16_t>(a.degree() + pb(x));
    return Perm::from_images(std::move(images));
  };

  // Outer loop over a's elements keeps the combined list lexicographically
  // sorted, since the first block dominates the comparison.
  std::vector<Perm> elements;
  elements.reserve(static_cast<size_t>(order));
  Perm id_a(a.degree()), id_b(b.degree());
  for (const auto& pa : a.elements())
    for (const auto& pb : b.elements()) elements.push_back(embed(pa, pb));

  std::vector<Perm> generators;
  for (const auto& g : a.generators()) generators.push_back(embed(g, id_b));
  for (const auto& g : b.generators()) generators.push_back(embed(id_a, g));

  return Group::from_elements(degree, std::move(elements), std::move(generators), limits);
}

}  // namespace hallcheck
