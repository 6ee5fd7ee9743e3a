#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "fabius/dyadic_table.hpp"

namespace fabius::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/*
 * Entry point of the `fabius` tool. `args` excludes the program name.
 *
 *   fvals   --max K                                   F(2^-k), k = 0..K
 *   dvals   --max I [--route alternating|from_f|theorem]
 *   moments --max N
 *   coeffs  --i I                                     c_I(0..I-1)
 *   gmatrix --i I [--source product|closed-form]      last row of G_I
 *   verify  --max I [--oracle-depth N]                PASS/FAIL per family
 *   oracle  --depth N --k K                           lower then upper bound
 *
 * Data subcommands take --format table|json|csv, --digits D and --header
 * (csv). Exit status: 0 ok, 1 a verify check failed, 2 usage error.
 * FABIUS_DEPTH_CAP in the environment overrides the oracle depth cap.
 */
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// Same, with an explicit table and depth cap (the environment is ignored).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err,
        DyadicTable& table, int depth_cap);

}  // namespace fabius::cli
