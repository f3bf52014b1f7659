#include "divgraph/table.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace divgraph {

namespace {

void check_precision(int precision) {
  if (precision < 1 || precision > 17) {
    throw std::invalid_argument("precision " + std::to_string(precision) +
                                " outside [1, 17]");
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string format_real(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", precision, value);
  return buffer;
}

Table::Table(std::vector<Column> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size()) {
    throw std::invalid_argument("row has " + std::to_string(cells.size()) +
                                " cells, table has " + std::to_string(columns_.size()) +
                                " columns");
  }
  rows_.push_back(std::move(cells));
}

void Table::add_footer_comment(std::string line) {
  footer_comments_.push_back(std::move(line));
}

void Table::write_csv(std::ostream& out, int precision) const {
  check_precision(precision);
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(columns_[i].name);
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      const Cell& cell = row[i];
      if (std::holds_alternative<std::monostate>(cell)) continue;
      switch (columns_[i].kind) {
        case ColumnKind::integer:
          out << std::get<std::int64_t>(cell);
          break;
        case ColumnKind::real:
          out << format_real(std::get<double>(cell), precision);
          break;
        case ColumnKind::boolean:
          out << (std::get<bool>(cell) ? "true" : "false");
          break;
        case ColumnKind::text:
          out << csv_escape(std::get<std::string>(cell));
          break;
      }
    }
    out << '\n';
  }
  for (const auto& comment : footer_comments_) out << "# " << comment << '\n';
}

void Table::write_json(std::ostream& out, int precision) const {
  check_precision(precision);
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json rec;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& key = columns_[i].name;
      const Cell& cell = row[i];
      if (std::holds_alternative<std::monostate>(cell)) {
        rec[key] = nullptr;
        continue;
      }
      switch (columns_[i].kind) {
        case ColumnKind::integer:
          rec[key] = std::get<std::int64_t>(cell);
          break;
        case ColumnKind::real:
          // quantize to the configured number of decimal places
          rec[key] = std::stod(format_real(std::get<double>(cell), precision));
          break;
        case ColumnKind::boolean:
          rec[key] = std::get<bool>(cell);
          break;
        case ColumnKind::text:
          rec[key] = std::get<std::string>(cell);
          break;
      }
    }
    records.push_back(std::move(rec));
  }
  out << records.dump(2) << '\n';
}

void Table::write(std::ostream& out, const OutputConfig& config) const {
  if (config.format == OutputFormat::csv) {
    write_csv(out, config.precision);
  } else {
    write_json(out, config.precision);
  }
}

}  // namespace divgraph
