#pragma once

#include <optional>
#include <span>
#include <string>

#include "fabius/rational.hpp"

namespace fabius::cli {

enum class Format { table, json, csv };

struct OutputRecord {
  long index;
  Rational value;
  std::string route;
};

struct RenderOptions {
  Format format = Format::table;
  std::optional<int> digits;  // adds a decimal column when set
  bool header = false;        // csv only
};

// Renders records in the given order. Every line ends with '\n'.
//   table  columns "index  value  [decimal]", two-space gutters, padded
//   csv    "index,value[,decimal]"
//   json   [{"index":0,"value":"1/2","route":"alternating","decimal":"0.5"}, ...]
std::string render(std::span<const OutputRecord> records, const RenderOptions& options);

}  // namespace fabius::cli
