#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/cli.hpp"
#include "cli/format.hpp"

using fabius::DyadicTable;
using fabius::Rational;
using fabius::TableKind;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_with(DyadicTable& table, std::vector<std::string> args, int cap = 16) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = fabius::cli::run(args, out, err, table, cap);
  return {code, out.str(), err.str()};
}

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = fabius::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("golden csv and table output") {
    auto r = run_cli({"dvals", "--max", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1/2\n1,5/36\n2,1/18\n3,143/5400\n");

    r = run_cli({"gmatrix", "--i", "2", "--source", "closed-form", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,-2/25\n2,23/30\n");

    r = run_cli({"moments", "--max", "0", "--digits", "4", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.out == "0  1/2  0.5000\n");
  }

  TEST_CASE("product and closed-form sources agree") {
    for (const char* i : {"1", "2", "5", "9"}) {
      const auto product = run_cli({"gmatrix", "--i", i, "--format", "csv"});
      const auto closed = run_cli({"gmatrix", "--i", i, "--source", "closed-form", "--format", "csv"});
      CHECK(product.out == closed.out);
    }
  }

  TEST_CASE("table columns are padded") {
    const auto r = run_cli({"fvals", "--max", "2"});
    CHECK(r.out == "0  1\n1  1/2\n2  5/72\n");
  }

  TEST_CASE("csv header and decimal column") {
    const auto r = run_cli({"moments", "--max", "1", "--format", "csv", "--digits", "3", "--header"});
    CHECK(r.out == "index,value,decimal\n0,1/2,0.500\n1,13/36,0.361\n");
  }

  TEST_CASE("other subcommands") {
    CHECK(run_cli({"fvals", "--max", "4", "--format", "csv"}).out ==
          "0,1\n1,1/2\n2,5/72\n3,1/288\n4,143/2073600\n");
    CHECK(run_cli({"coeffs", "--i", "3", "--format", "csv"}).out == "0,1/144\n1,0\n2,1/16\n");
    CHECK(run_cli({"dvals", "--max", "4", "--route", "theorem", "--format", "csv"}).out ==
          "1,5/36\n3,143/5400\n");
    CHECK(run_cli({"dvals", "--max", "3", "--route", "from_f", "--format", "csv"}).out ==
          "0,1/2\n1,5/36\n2,1/18\n3,143/5400\n");
    CHECK(run_cli({"oracle", "--depth", "2", "--k", "2", "--format", "csv"}).out == "2,0\n2,1/4\n");
  }

  TEST_CASE("json output follows the record schema and is deterministic") {
    const auto first = run_cli({"dvals", "--max", "5", "--format", "json", "--digits", "6"});
    const auto second = run_cli({"dvals", "--max", "5", "--format", "json", "--digits", "6"});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    const auto doc = nlohmann::json::parse(first.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 6);
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const auto& rec = doc[i];
      CHECK(rec.size() == 4);
      CHECK(rec["index"].is_number_integer());
      CHECK(rec["index"].get<long>() == static_cast<long>(i));
      CHECK(rec["value"].is_string());
      CHECK(rec["route"] == "alternating");
      CHECK(rec["decimal"].is_string());
      CHECK_NOTHROW(Rational::parse(rec["value"].get<std::string>()));
    }
    const auto plain = nlohmann::json::parse(run_cli({"gmatrix", "--i", "2", "--format", "json"}).out);
    CHECK(plain[0].size() == 3);
    CHECK(plain[0]["route"] == "matrix");
    CHECK(plain[0]["value"] == "-2/25");
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"dvals", "--max", "3", "--bogus"}).code == 2);
    CHECK(run_cli({"dvals", "--max", "-1"}).code == 2);
    CHECK(run_cli({"dvals"}).code == 2);
    CHECK(run_cli({"dvals", "--max", "3", "--route", "sideways"}).code == 2);
    CHECK(run_cli({"fvals", "--max", "3", "--format", "xml"}).code == 2);
    CHECK(run_cli({"coeffs", "--i", "0"}).code == 2);
    CHECK(run_cli({"gmatrix", "--i", "0"}).code == 2);
    CHECK(run_cli({"gmatrix", "--i", "2", "--source", "guess"}).code == 2);
    const auto deep = run_cli({"oracle", "--depth", "17", "--k", "2"});
    CHECK(deep.code == 2);
    CHECK(deep.out.empty());
    CHECK_FALSE(deep.err.empty());
    CHECK(run_cli({"verify", "--max", "3", "--oracle-depth", "40"}).code == 2);
  }

  TEST_CASE("help exits 0") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gmatrix") != std::string::npos);
  }

  TEST_CASE("FABIUS_DEPTH_CAP overrides the depth cap") {
    ::setenv("FABIUS_DEPTH_CAP", "4", 1);
    CHECK(run_cli({"oracle", "--depth", "5", "--k", "2"}).code == 2);
    CHECK(run_cli({"oracle", "--depth", "4", "--k", "2"}).code == 0);
    ::setenv("FABIUS_DEPTH_CAP", "18", 1);
    CHECK(run_cli({"oracle", "--depth", "17", "--k", "1", "--format", "csv"}).code == 0);
    ::setenv("FABIUS_DEPTH_CAP", "lots", 1);
    CHECK(run_cli({"fvals", "--max", "1"}).code == 2);
    ::unsetenv("FABIUS_DEPTH_CAP");
    CHECK(run_cli({"oracle", "--depth", "17", "--k", "2"}).code == 2);
  }

  TEST_CASE("verify passes on a clean table") {
    DyadicTable table;
    const auto r = run_with(table, {"verify", "--max", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS oracle-moments\n") != std::string::npos);
  }

  TEST_CASE("verify exit code is 1 iff some line is FAIL") {
    DyadicTable table;
    (void)run_with(table, {"verify", "--max", "4", "--oracle-depth", "8"});
    table.overwrite(TableKind::mu, 2, Rational(5, 18) + Rational::pow2(-200));
    const auto r = run_with(table, {"verify", "--max", "4", "--oracle-depth", "8"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL moments: identity at n = 2\n") != std::string::npos);
  }
}

TEST_SUITE("render") {
  using fabius::cli::Format;
  using fabius::cli::OutputRecord;
  using fabius::cli::RenderOptions;

  TEST_CASE("empty input renders nothing for table and csv") {
    const std::vector<OutputRecord> none;
    CHECK(fabius::cli::render(none, RenderOptions{}).empty());
    CHECK(fabius::cli::render(none, RenderOptions{Format::csv, std::nullopt, false}).empty());
    CHECK(fabius::cli::render(none, RenderOptions{Format::json, std::nullopt, false}) == "[]\n");
  }
}
