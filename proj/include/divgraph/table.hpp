#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace divgraph {

enum class OutputFormat { csv, json };

struct OutputConfig {
  OutputFormat format = OutputFormat::csv;
  std::string out_path;  // empty -> standard output
  int precision = 12;    // decimal places for real-valued fields, in [1, 17]
  bool normalized_betweenness = false;
};

enum class ColumnKind { integer, real, boolean, text };

struct Column {
  std::string name;
  ColumnKind kind;
};

/// One table cell; monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

/// Column-typed rows rendered as CSV (header + rows, LF endings) or as a JSON
/// array of flat records with keys identical to the CSV headers. Real cells
/// are written with a fixed number of decimal places; identical inputs always
/// produce byte-identical output.
class Table {
public:
  explicit Table(std::vector<Column> columns);

  void add_row(std::vector<Cell> cells);

  /// Trailing '#'-prefixed comment line, emitted after the CSV rows only.
  void add_footer_comment(std::string line);

  void write_csv(std::ostream& out, int precision) const;
  void write_json(std::ostream& out, int precision) const;
  void write(std::ostream& out, const OutputConfig& config) const;

  std::size_t row_count() const { return rows_.size(); }
  const std::vector<Column>& columns() const { return columns_; }

private:
  std::vector<Column> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::string> footer_comments_;
};

/// Fixed-point decimal rendering used for every real-valued field.
std::string format_real(double value, int precision);

}  // namespace divgraph
