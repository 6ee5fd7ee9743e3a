#pragma once

#include <string>
#include <vector>

#include "fabius/dyadic_table.hpp"
#include "fabius/oracle.hpp"

namespace fabius::cli {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first failure, empty on success
};

/*
 * The invariant sweep behind `fabius verify`.
 *
 * Every check reads values from `table`, so a corrupted entry is caught by
 * at least one family: each stored F, d and mu value is re-derived from its
 * neighbours and compared, and the independent routes (from_f, theorem,
 * matrix product, oracle) are compared against the stored sequences.
 *
 * Oracle families use `oracle_depth` and cover F(2^-k) for k <= depth and
 * mu_n for n <= min(max_index, 10).
 */
std::vector<CheckResult> run_verification(DyadicTable& table, const UniformSumOracle& oracle,
                                          long max_index, int oracle_depth);

}  // namespace fabius::cli
