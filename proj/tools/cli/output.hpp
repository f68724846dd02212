#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace padicmech::cli {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json };

Format parse_format(const std::string& name);

/// Rows of typed cells under fixed column names. A table marked `record`
/// renders as a single JSON object instead of an array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  bool record = false;

  void add(std::vector<Json> row);
};

Table record(std::vector<std::pair<std::string, Json>> fields);

/// CSV: header line then one line per row; arrays join with ';'.
/// JSON: two-space indented, key order as declared.
void emit(const Table& table, Format format, std::ostream& out);

}  // namespace padicmech::cli
