#pragma once

#include <optional>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "fabius/rational.hpp"

namespace fabius {

// Provenance of a tabulated value.
enum class Route { alternating, from_f, theorem, matrix, closed_form, oracle_bounded };

std::string_view route_name(Route route);

// The two scalar routes to d_i.
enum class DRoute { alternating, from_f };

enum class TableKind { f, d_alternating, d_from_f, d_theorem, mu };

struct TableEntry {
  long index;
  Rational value;
  Route route;
};

/*
 * Memoized tables for F(2^-k), d_i (per route) and mu_n.
 *
 * Every sequence grows bottom-up and monotonically by index; nothing is
 * computed by recursion. Readers share a lock; growth is serialized.
 *
 *   f(k)          F(2^-k) from the mutually recursive even/odd formulas
 *   d(i, route)   alternating: the d-recurrences seeded by d_0 = 1/2
 *                 from_f:      2^{i(i+1)/2} i! F(2^{-i-1})
 *   d_theorem(i)  odd i only; consumes this table's own theorem-route
 *                 values d_1, d_3, ..., d_{i-2}
 *   mu(n)         1/(n+1) - d(n, alternating)
 */
class DyadicTable {
 public:
  DyadicTable() = default;
  DyadicTable(const DyadicTable&) = delete;
  DyadicTable& operator=(const DyadicTable&) = delete;

  Rational f(long k);
  Rational d(long i, DRoute route = DRoute::alternating);
  Rational d_theorem(long i);
  Rational mu(long n);

  // Materializes and returns entries 0..max_index in ascending order
  // (odd indices only for d_theorem).
  std::vector<TableEntry> entries(TableKind kind, long max_index);

  // Stored value without materializing anything.
  std::optional<Rational> stored(TableKind kind, long index) const;

  // Replaces a materialized entry in place. Dependent entries are not
  // recomputed; this exists so verification can be mutation-tested.
  // Throws std::out_of_range for an entry that is not materialized and
  // std::invalid_argument for a non-positive value.
  void overwrite(TableKind kind, long index, const Rational& value);

 private:
  void grow_f(long k);
  void grow_d_even(long count);
  void grow_d_odd(long count);
  void grow_d_from_f(long count);
  void grow_d_theorem(long count);
  void grow_mu(long count);

  const Rational* find(TableKind kind, long index) const;

  mutable std::shared_mutex mutex_;
  std::vector<Rational> f_;
  std::vector<Rational> d_even_;  // d_even_[t] = d_{2t}
  std::vector<Rational> d_odd_;   // d_odd_[t]  = d_{2t+1}
  std::vector<Rational> d_from_f_;
  std::vector<Rational> d_theorem_;  // d_theorem_[t] = d_{2t+1}
  std::vector<Rational> mu_;
};

// Process-wide table used by the convenience overloads in fabius.hpp.
DyadicTable& shared_table();

}  // namespace fabius
