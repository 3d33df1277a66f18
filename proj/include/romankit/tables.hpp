#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace romankit {

enum class OutputFormat { plain, csv, json };

OutputFormat parse_format(std::string_view text);  // usage_error on unknown

// A rendered-value grid. 2-D tables carry column labels; 1-D tables
// (factorials, resistance) have a single value column named
// `value_header`. Cells are nullopt where the table prints nothing.
struct Table {
  std::string name;
  std::vector<std::int64_t> rows;
  std::vector<std::int64_t> cols;  // empty for 1-D tables
  std::string value_header;        // 1-D tables only
  std::vector<std::vector<std::optional<std::string>>> cells;
  std::map<std::int64_t, std::string> row_marks;  // plain-format footnote markers
  std::vector<std::string> notes;                 // plain-format footnotes
};

const std::vector<std::string>& table_names();

// Builds the named table from the definitions (nothing is transcribed).
// Unknown names are a usage error.
Table make_table(std::string_view name);

std::string render_table(const Table& table, OutputFormat format);

}  // namespace romankit
