#pragma once

#include "hallcheck/errors.hpp"

namespace hallcheck {

/// Resource caps. Everything in this library is exhaustive, so the caps are
/// what keeps a bad input from running forever. All counts use explicit
/// element enumeration: indices are stored as 16-bit integers, hence the
/// hard ceiling of 65535 on degree and order.
struct Limits {
  int max_degree = 64;           // points a permutation may act on
  long max_order = 20000;        // elements a group may enumerate
  long max_subgroups = 100000;   // subgroup lattice size cap
  long max_hall_sets = 100000;   // complete Hall sigma-set enumeration cap

  // A dense order x order multiplication table is built for groups up to
  // this order; larger groups fall back to compose-and-lookup.
  long dense_table_max_order = 2048;

  void validate() const {
    if (max_degree < 1 || max_degree > 65535)
      throw config_error("max_degree must be in [1, 65535]");
    if (max_order < 1 || max_order > 65535)
      throw config_error("max_order must be in [1, 65535]");
    if (max_subgroups < 1) throw config_error("max_subgroups must be positive");
    if (max_hall_sets < 1) throw config_error("max_hall_sets must be positive");
    if (dense_table_max_order < 0)
      throw config_error("dense_table_max_order must be non-negative");
  }
};

}  // namespace hallcheck
