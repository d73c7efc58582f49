#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hallcheck/errors.hpp"

namespace hallcheck {

/// A permutation of {0, ..., degree-1}, stored as its image sequence.
///
/// Composition is right-to-left everywhere in this library:
/// compose(a, b) applies b first, then a.
class Perm {
public:
  Perm() = default;

  /// Identity on `degree` points.
  explicit Perm(int degree) : images_(static_cast<size_t>(degree)) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  static Perm from_images(std::vector<std::uint16_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
      if (v >= images.size() || seen[v])
        throw structural_error("image sequence is not a bijection");
      seen[v] = true;
    }
    Perm p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds a permutation from disjoint cycles over {0, ..., degree-1}.
  /// Cycles need not mention fixed points. Overlapping or out-of-range
  /// points are configuration errors.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    if (degree < 0) throw config_error("degree must be non-negative");
    Perm p(degree);
    std::vector<bool> used(static_cast<size_t>(degree), false);
    for (const auto& cyc : cycles) {
      for (size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i];
        int to = cyc[(i + 1) % cyc.size()];
        if (from < 0 || from >= degree)
          throw config_error("cycle point " + std::to_string(from) +
                             " out of range for degree " + std::to_string(degree));
        if (used[static_cast<size_t>(from)])
          throw config_error("point " + std::to_string(from) +
                             " appears in more than one cycle");
        used[static_cast<size_t>(from)] = true;
        p.images_[static_cast<size_t>(from)] = static_cast<std::uint16_t>(to);
      }
    }
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int operator()(int point) const { return images_[static_cast<size_t>(point)]; }

  const std::vector<std::uint16_t>& images() const { return images_; }

  bool is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm p;
    p.images_.resize(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
      p.images_[images_[i]] = static_cast<std::uint16_t>(i);
    return p;
  }

  /// Multiplicative order, from the lcm of cycle lengths.
  long order() const {
    long result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (size_t start = 0; start < images_.size(); ++start) {
      if (seen[start]) continue;
      long len = 0;
      size_t x = start;
      do {
        seen[x] = true;
        x = images_[x];
        ++len;
      } while (x != start);
      result = std::lcm(result, len);
    }
    return result;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (size_t start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      std::vector<int> cyc;
      size_t x = start;
      do {
        seen[x] = true;
        cyc.push_back(static_cast<int>(x));
        x = images_[x];
      } while (x != start);
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Disjoint-cycle notation with 0-based points; each cycle starts at its
  /// smallest point, cycles are sorted by first point, fixed points are
  /// omitted, and the identity prints as "()".
  std::string to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& cyc : cs) {
      out += '(';
      for (size_t i = 0; i < cyc.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(cyc[i]);
      }
      out += ')';
    }
    return out;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (auto v : images_) {
      h ^= v;
      h *= 1099511628211ull;
    }
    // splitmix64 finalizer to spread low-entropy inputs
    h += 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return h ^ (h >> 31);
  }

  friend bool operator==(const Perm& a, const Perm& b) = default;
  /// Lexicographic comparison of image sequences; this is the canonical
  /// element order used everywhere.
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

private:
  std::vector<std::uint16_t> images_;
};

/// compose(a, b) applies b first, then a: compose(a,b)(x) == a(b(x)).
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw structural_error("cannot compose permutations of different degree");
  std::vector<std::uint16_t> images(static_cast<size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x)
    images[static_cast<size_t>(x)] = static_cast<std::uint16_t>(a(b(x)));
  Perm p = Perm::from_images(std::move(images));
  return p;
}

struct PermHash {
  std::uint64_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace hallcheck
