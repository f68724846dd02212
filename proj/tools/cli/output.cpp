#include "output.hpp"

#include "padicmech/errors.hpp"

namespace padicmech::cli {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw InvalidArgument("unknown format '" + name + "' (expected csv or json)");
}

void Table::add(std::vector<Json> row) {
  if (row.size() != columns.size()) throw InvalidArgument("row width does not match the header");
  rows.push_back(std::move(row));
}

Table record(std::vector<std::pair<std::string, Json>> fields) {
  Table t;
  t.record = true;
  std::vector<Json> row;
  for (auto& [k, v] : fields) {
    t.columns.push_back(k);
    row.push_back(std::move(v));
  }
  t.rows.push_back(std::move(row));
  return t;
}

namespace {

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
  } else if (v.is_null()) {
    s = "";
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

}  // namespace

void emit(const Table& table, Format format, std::ostream& out) {
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_cell(table.columns[i]);
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    return;
  }
  auto object = [&](const std::vector<Json>& row) {
    Json o = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) o[table.columns[i]] = row[i];
    return o;
  };
  Json doc;
  if (table.record && table.rows.size() == 1) {
    doc = object(table.rows.front());
  } else {
    doc = Json::array();
    for (const auto& row : table.rows) doc.push_back(object(row));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace padicmech::cli
