#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>

#include "fabius/fabius.hpp"
#include "fabius/matrix_forms.hpp"
#include "fabius/oracle.hpp"
#include "format.hpp"
#include "verify.hpp"

namespace fabius::cli {

namespace {

constexpr long kMaxTableIndex = 1000;
constexpr long kMaxMatrixIndex = 200;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormatFlags {
  std::string format = "table";
  int digits = -1;
  bool header = false;

  RenderOptions options() const {
    static const std::map<std::string, Format> kFormats{
        {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};
    RenderOptions opts;
    opts.format = kFormats.at(format);
    if (digits >= 0) opts.digits = digits;
    opts.header = header;
    return opts;
  }
};

void add_format_flags(CLI::App* sub, FormatFlags& flags) {
  sub->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--digits", flags.digits, "Add a decimal column with D digits")
      ->check(CLI::Range(0, 10000));
  sub->add_flag("--header", flags.header, "Emit a header row (csv)");
}

std::vector<OutputRecord> to_records(const std::vector<TableEntry>& entries) {
  std::vector<OutputRecord> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back({e.index, e.value, std::string(route_name(e.route))});
  return out;
}

std::vector<OutputRecord> row_records(const RationalVector& row, Route route) {
  std::vector<OutputRecord> out;
  for (std::size_t j = 1; j <= row.size(); ++j) {
    out.push_back({static_cast<long>(j), row(j), std::string(route_name(route))});
  }
  return out;
}

int depth_cap_from_environment() {
  const char* raw = std::getenv("FABIUS_DEPTH_CAP");
  if (raw == nullptr || *raw == '\0') return UniformSumOracle::kDefaultDepthCap;
  const std::string text(raw);
  int cap = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap < 1 ||
      cap > UniformSumOracle::kHardDepthLimit) {
    throw UsageError("FABIUS_DEPTH_CAP must be an integer in [1, " +
                     std::to_string(UniformSumOracle::kHardDepthLimit) + "], got '" + text + "'");
  }
  return cap;
}

void require_depth(int depth, int cap) {
  if (depth < 1 || depth > cap) {
    throw UsageError("oracle depth " + std::to_string(depth) + " exceeds the depth cap " +
                     std::to_string(cap) + " (set FABIUS_DEPTH_CAP to raise it)");
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, DyadicTable& table,
        int depth_cap) {
  CLI::App app{"Exact Fabius-function values, scaled sequence d_i and moments"};
  app.name("fabius");
  app.require_subcommand(1);

  long max_index = 0;
  long matrix_index = 0;
  std::string d_route = "alternating";
  std::string g_source = "product";
  int oracle_depth = -1;
  long oracle_k = 0;
  FormatFlags flags;

  auto* fvals = app.add_subcommand("fvals", "F(2^-k) for k = 0..K");
  fvals->add_option("--max", max_index, "Largest k")->required()->check(CLI::Range(0L, kMaxTableIndex));
  add_format_flags(fvals, flags);

  auto* dvals = app.add_subcommand("dvals", "d_i = 2^{i(i+1)/2} i! F(2^{-i-1})");
  dvals->add_option("--max", max_index, "Largest i")->required()->check(CLI::Range(0L, kMaxTableIndex));
  dvals->add_option("--route", d_route, "Computation route")
      ->check(CLI::IsMember({"alternating", "from_f", "theorem"}));
  add_format_flags(dvals, flags);

  auto* moments = app.add_subcommand("moments", "mu_n = integral_0^1 F(x) x^n dx");
  moments->add_option("--max", max_index, "Largest n")->required()->check(CLI::Range(0L, kMaxTableIndex));
  add_format_flags(moments, flags);

  auto* coeffs = app.add_subcommand("coeffs", "Coefficients c_I(0..I-1) of P_I");
  coeffs->add_option("--i", matrix_index, "Polynomial index")->required()->check(CLI::Range(1L, kMaxTableIndex));
  add_format_flags(coeffs, flags);

  auto* gmatrix = app.add_subcommand("gmatrix", "Last row of G_I");
  gmatrix->add_option("--i", matrix_index, "Matrix index")->required()->check(CLI::Range(1L, kMaxMatrixIndex));
  gmatrix->add_option("--source", g_source, "Exact product or closed form")
      ->check(CLI::IsMember({"product", "closed-form"}));
  add_format_flags(gmatrix, flags);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--max", max_index, "Largest index swept")->required()->check(CLI::Range(1L, kMaxMatrixIndex));
  verify->add_option("--oracle-depth", oracle_depth, "Truncation depth of the oracle");

  auto* oracle_cmd = app.add_subcommand("oracle", "Sandwich bounds on F(2^-K)");
  oracle_cmd->add_option("--depth", oracle_depth, "Truncation depth N")->required();
  oracle_cmd->add_option("--k", oracle_k, "Dyadic exponent")->required()->check(CLI::Range(0L, kMaxTableIndex));
  add_format_flags(oracle_cmd, flags);

  std::vector<const char*> argv{"fabius"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fabius: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::vector<OutputRecord> records;
    if (fvals->parsed()) {
      records = to_records(table.entries(TableKind::f, max_index));
    } else if (dvals->parsed()) {
      const TableKind kind = d_route == "alternating" ? TableKind::d_alternating
                             : d_route == "from_f"    ? TableKind::d_from_f
                                                      : TableKind::d_theorem;
      records = to_records(table.entries(kind, max_index));
    } else if (moments->parsed()) {
      records = to_records(table.entries(TableKind::mu, max_index));
    } else if (coeffs->parsed()) {
      for (long j = 0; j < matrix_index; ++j) {
        records.push_back({j, coeff_c(matrix_index, j, table), std::string(route_name(Route::alternating))});
      }
    } else if (gmatrix->parsed()) {
      if (g_source == "product") {
        const RationalMatrix g = build_G(matrix_index);
        records = row_records(g.row(g.rows()), Route::matrix);
      } else {
        records = row_records(closed_form_row(matrix_index), Route::closed_form);
      }
    } else if (oracle_cmd->parsed()) {
      require_depth(oracle_depth, depth_cap);
      const UniformSumOracle oracle(depth_cap);
      const BoundsPair bounds = oracle.sandwich(oracle_depth, oracle_k);
      records.push_back({oracle_k, bounds.lower, "oracle-lower"});
      records.push_back({oracle_k, bounds.upper, "oracle-upper"});
    } else if (verify->parsed()) {
      const int depth = oracle_depth < 0 ? std::min(UniformSumOracle::kDefaultDepthCap, depth_cap) : oracle_depth;
      require_depth(depth, depth_cap);
      const UniformSumOracle oracle(depth_cap);
      bool all_passed = true;
      for (const auto& check : run_verification(table, oracle, max_index, depth)) {
        all_passed = all_passed && check.passed;
        out << (check.passed ? "PASS " : "FAIL ") << check.name;
        if (!check.passed) out << ": " << check.detail;
        out << "\n";
      }
      return all_passed ? kExitOk : kExitCheckFailed;
    }
    out << render(records, flags.options());
    return kExitOk;
  } catch (const UsageError& e) {
    err << "fabius: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  int cap = 0;
  try {
    cap = depth_cap_from_environment();
  } catch (const UsageError& e) {
    err << "fabius: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(args, out, err, shared_table(), cap);
}

}  // namespace fabius::cli
