#pragma once

#include <cctype>
#include <optional>
#include <string>

#include "hallcheck/sigma.hpp"

namespace hallcheck {

/// Recipe for a group. Buildable kinds:
///   cyclic:n          rotation of n points
///   dihedral:n        order 2n on n points (n >= 3)
///   symmetric:n       Sym(n)
///   alternating:n     Alt(n), n >= 3
///   metacyclic:p:d    <x -> x+1, x -> g x> mod p, g of exact order d, d | p-1
///   product(a,b)      external direct product
///   raw               explicit degree + generator list (from group files)
struct GroupSpec {
  enum class Kind { cyclic, dihedral, symmetric, alternating, metacyclic, product, raw };

  Kind kind = Kind::raw;
  std::string label;
  long n = 0;     // cyclic/dihedral/symmetric/alternating
  long p = 0;     // metacyclic
  long d = 0;     // metacyclic
  std::vector<GroupSpec> children;      // product: exactly two
  int raw_degree = 0;                   // raw
  std::vector<Perm> raw_generators;     // raw
};

/// Canonical inline form; raw specs have none and fall back to their label.
inline std::string to_string(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::cyclic: return "cyclic:" + std::to_string(spec.n);
    case K::dihedral: return "dihedral:" + std::to_string(spec.n);
    case K::symmetric: return "symmetric:" + std::to_string(spec.n);
    case K::alternating: return "alternating:" + std::to_string(spec.n);
    case K::metacyclic:
      return "metacyclic:" + std::to_string(spec.p) + ":" + std::to_string(spec.d);
    case K::product:
      return "product(" + to_string(spec.children[0]) + "," +
             to_string(spec.children[1]) + ")";
    case K::raw: return spec.label;
  }
  return spec.label;
}

namespace detail {

inline GroupSpec make_spec(GroupSpec::Kind kind, long n) {
  GroupSpec s;
  s.kind = kind;
  s.n = n;
  s.label = to_string(s);
  return s;
}

inline long multiplicative_order(long g, long p) {
  long x = g % p, ord = 1;
  while (x != 1) {
    x = (x * g) % p;
    ++ord;
  }
  return ord;
}

}  // namespace detail

inline GroupSpec cyclic_spec(long n) { return detail::make_spec(GroupSpec::Kind::cyclic, n); }
inline GroupSpec dihedral_spec(long n) { return detail::make_spec(GroupSpec::Kind::dihedral, n); }
inline GroupSpec symmetric_spec(long n) { return detail::make_spec(GroupSpec::Kind::symmetric, n); }
inline GroupSpec alternating_spec(long n) {
  return detail::make_spec(GroupSpec::Kind::alternating, n);
}

inline GroupSpec metacyclic_spec(long p, long d) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::metacyclic;
  s.p = p;
  s.d = d;
  s.label = to_string(s);
  return s;
}

inline GroupSpec product_spec(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::product;
  s.children.push_back(std::move(a));
  s.children.push_back(std::move(b));
  s.label = to_string(s);
  return s;
}

inline GroupSpec raw_spec(std::string label, int degree, std::vector<Perm> generators) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::raw;
  s.label = std::move(label);
  s.raw_degree = degree;
  s.raw_generators = std::move(generators);
  return s;
}

inline Group build(const GroupSpec& spec, const Limits& limits = {}) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::cyclic: {
      if (spec.n < 1) throw config_error("cyclic: n must be >= 1");
      int deg = static_cast<int>(spec.n);
      std::vector<Perm> gens;
      if (spec.n >= 2) {
        std::vector<int> cyc(static_cast<size_t>(spec.n));
        std::iota(cyc.begin(), cyc.end(), 0);
        gens.push_back(Perm::from_cycles(deg, {cyc}));
      }
      return Group::generate(deg, std::move(gens), limits);
    }
    case K::dihedral: {
      if (spec.n < 3)
        throw config_error("dihedral: n must be >= 3 (order 2n acting on n points)");
      int deg = static_cast<int>(spec.n);
      std::vector<int> rot(static_cast<size_t>(spec.n));
      std::iota(rot.begin(), rot.end(), 0);
      std::vector<std::uint16_t> refl(static_cast<size_t>(spec.n));
      for (long x = 0; x < spec.n; ++x)
        refl[static_cast<size_t>(x)] = static_cast<std::uint16_t>((spec.n - x) % spec.n);
      return Group::generate(
          deg, {Perm::from_cycles(deg, {rot}), Perm::from_images(std::move(refl))}, limits);
    }
    case K::symmetric: {
      if (spec.n < 1) throw config_error("symmetric: n must be >= 1");
      int deg = static_cast<int>(spec.n);
      std::vector<Perm> gens;
      if (spec.n >= 2) gens.push_back(Perm::from_cycles(deg, {{0, 1}}));
      if (spec.n >= 3) {
        std::vector<int> cyc(static_cast<size_t>(spec.n));
        std::iota(cyc.begin(), cyc.end(), 0);
        gens.push_back(Perm::from_cycles(deg, {cyc}));
      }
      return Group::generate(deg, std::move(gens), limits);
    }
    case K::alternating: {
      if (spec.n < 3) throw config_error("alternating: n must be >= 3");
      int deg = static_cast<int>(spec.n);
      std::vector<Perm> gens{Perm::from_cycles(deg, {{0, 1, 2}})};
      if (spec.n > 3) {
        // even cycle on all points when n is odd, else on points 1..n-1
        std::vector<int> cyc;
        for (long x = (spec.n % 2 == 1) ? 0 : 1; x < spec.n; ++x)
          cyc.push_back(static_cast<int>(x));
        gens.push_back(Perm::from_cycles(deg, {cyc}));
      }
      return Group::generate(deg, std::move(gens), limits);
    }
    case K::metacyclic: {
      if (!is_prime(spec.p)) throw config_error("metacyclic: p must be prime");
      if (spec.d < 1 || (spec.p - 1) % spec.d != 0)
        throw config_error("metacyclic: d must be >= 1 and divide p-1");
      int deg = static_cast<int>(spec.p);
      // smallest multiplier of exact order d in (Z/p)*
      long g = 0;
      for (long cand = 1; cand < spec.p; ++cand) {
        if (detail::multiplicative_order(cand, spec.p) == spec.d) {
          g = cand;
          break;
        }
      }
      assert(g != 0);  // (Z/p)* is cyclic, so every divisor of p-1 occurs
      std::vector<int> trans(static_cast<size_t>(spec.p));
      std::iota(trans.begin(), trans.end(), 0);
      std::vector<std::uint16_t> mult(static_cast<size_t>(spec.p));
      for (long x = 0; x < spec.p; ++x)
        mult[static_cast<size_t>(x)] = static_cast<std::uint16_t>((g * x) % spec.p);
      return Group::generate(
          deg, {Perm::from_cycles(deg, {trans}), Perm::from_images(std::move(mult))},
          limits);
    }
    case K::product: {
      if (spec.children.size() != 2)
        throw config_error("product: exactly two factors required");
      return direct_product(build(spec.children[0], limits),
                            build(spec.children[1], limits), limits);
    }
    case K::raw: {
      return Group::generate(spec.raw_degree, spec.raw_generators, limits);
    }
  }
  throw config_error("unknown group spec kind");
}

/// Parses the inline spec grammar:
///   spec := name ':' int (':' int)? | 'product' '(' spec ',' spec ')'
inline GroupSpec parse_group_spec(const std::string& text) {
  size_t pos = 0;
  auto fail = [&](const std::string& msg) -> parse_error {
    return parse_error("group spec: " + msg, 1, static_cast<int>(pos) + 1);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto read_name = [&]() -> std::string {
    size_t start = pos;
    while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_'))
      ++pos;
    if (pos == start) throw fail("expected a construction name");
    return text.substr(start, pos - start);
  };
  auto read_int = [&]() -> long {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw fail("expected an integer");
    return std::stol(text.substr(start, pos - start));
  };

  std::function<GroupSpec()> parse_spec = [&]() -> GroupSpec {
    skip_ws();
    std::string name = read_name();
    if (name == "product") {
      skip_ws();
      if (pos >= text.size() || text[pos] != '(') throw fail("expected '('");
      ++pos;
      GroupSpec a = parse_spec();
      skip_ws();
      if (pos >= text.size() || text[pos] != ',') throw fail("expected ','");
      ++pos;
      GroupSpec b = parse_spec();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') throw fail("expected ')'");
      ++pos;
      return product_spec(std::move(a), std::move(b));
    }
    if (pos >= text.size() || text[pos] != ':')
      throw fail("expected ':' after '" + name + "'");
    ++pos;
    long first = read_int();
    if (name == "metacyclic") {
      if (pos >= text.size() || text[pos] != ':')
        throw fail("metacyclic takes two parameters, p:d");
      ++pos;
      long second = read_int();
      return metacyclic_spec(first, second);
    }
    if (name == "cyclic") return cyclic_spec(first);
    if (name == "dihedral") return dihedral_spec(first);
    if (name == "symmetric") return symmetric_spec(first);
    if (name == "alternating") return alternating_spec(first);
    throw fail("unknown construction '" + name + "'");
  };

  GroupSpec spec = parse_spec();
  skip_ws();
  if (pos != text.size()) throw fail("trailing characters after group spec");
  return spec;
}

/// The built-in catalog: cyclic groups to order 63, dihedral groups to order
/// 40, the small symmetric/alternating groups, every metacyclic(p, d) with
/// p <= 31 and d | p-1, and pairwise direct products of six small seeds.
inline std::vector<GroupSpec> default_catalog() {
  std::vector<GroupSpec> out;
  for (long n = 1; n <= 63; ++n) out.push_back(cyclic_spec(n));
  for (long n = 3; n <= 20; ++n) out.push_back(dihedral_spec(n));
  out.push_back(symmetric_spec(3));
  out.push_back(symmetric_spec(4));
  out.push_back(symmetric_spec(5));
  out.push_back(alternating_spec(4));
  out.push_back(alternating_spec(5));
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L})
    for (long d = 1; d <= p - 1; ++d)
      if ((p - 1) % d == 0) out.push_back(metacyclic_spec(p, d));
  const std::vector<GroupSpec> seeds = {cyclic_spec(2),   cyclic_spec(3),
                                        cyclic_spec(4),   symmetric_spec(3),
                                        dihedral_spec(4), metacyclic_spec(7, 3)};
  for (size_t i = 0; i < seeds.size(); ++i)
    for (size_t j = i; j < seeds.size(); ++j)
      out.push_back(product_spec(seeds[i], seeds[j]));
  return out;
}

/// A sigma partition recipe: either a concrete partition or the `sylow`
/// preset, which materializes per group as singleton classes over pi(G)
/// plus the rest class (equivalent to the full singleton partition for
/// every predicate here, since only classes meeting pi(G) matter).
struct SigmaSpec {
  enum class Kind { sylow_preset, concrete };

  Kind kind = Kind::concrete;
  std::string label;
  std::optional<SigmaPartition> partition;  // concrete only

  static SigmaSpec sylow() { return {Kind::sylow_preset, "sylow", std::nullopt}; }

  static SigmaSpec concrete(SigmaPartition p) {
    std::string label = p.label();
    return {Kind::concrete, std::move(label), std::move(p)};
  }

  SigmaPartition resolve(const Group& G) const {
    if (kind == Kind::sylow_preset) return SigmaPartition::sylow_for(G.primes(), label);
    return *partition;
  }
};

/// Built-in presets: `sylow`, `paper-example` ({2,3} {7} rest) and
/// `two-class` ({2,3} rest).
inline std::optional<SigmaSpec> sigma_preset(const std::string& name) {
  if (name == "sylow") return SigmaSpec::sylow();
  if (name == "paper-example")
    return SigmaSpec::concrete(SigmaPartition({{2, 3}, {7}}, true, "paper-example"));
  if (name == "two-class")
    return SigmaSpec::concrete(SigmaPartition({{2, 3}}, true, "two-class"));
  return std::nullopt;
}

inline std::vector<SigmaSpec> default_sigma_specs() {
  return {*sigma_preset("sylow"), *sigma_preset("paper-example"),
          *sigma_preset("two-class")};
}

}  // namespace hallcheck
