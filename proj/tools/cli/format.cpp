#include "format.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

namespace fabius::cli {

namespace {

std::vector<std::vector<std::string>> cells_of(std::span<const OutputRecord> records,
                                               const RenderOptions& options) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const auto& rec : records) {
    std::vector<std::string> row{std::to_string(rec.index), rec.value.to_string()};
    if (options.digits) row.push_back(rec.value.to_decimal(*options.digits));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return {};
  std::vector<std::size_t> widths(rows.front().size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out.append(widths[c] - row[c].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

std::string render_csv(const std::vector<std::vector<std::string>>& rows, const RenderOptions& options) {
  std::string out;
  if (options.header) out += options.digits ? "index,value,decimal\n" : "index,value\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

std::string render_json(std::span<const OutputRecord> records, const RenderOptions& options) {
  auto list = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json obj;
    obj["index"] = rec.index;
    obj["value"] = rec.value.to_string();
    obj["route"] = rec.route;
    if (options.digits) obj["decimal"] = rec.value.to_decimal(*options.digits);
    list.push_back(std::move(obj));
  }
  return list.dump() + "\n";
}

}  // namespace

std::string render(std::span<const OutputRecord> records, const RenderOptions& options) {
  switch (options.format) {
    case Format::json: return render_json(records, options);
    case Format::csv: return render_csv(cells_of(records, options), options);
    case Format::table: break;
  }
  return render_table(cells_of(records, options));
}

}  // namespace fabius::cli
