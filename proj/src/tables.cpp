#include "romankit/tables.hpp"

#include <functional>

#include <json.hpp>

#include "romankit/coefficients.hpp"
#include "romankit/errors.hpp"
#include "romankit/resistance.hpp"

namespace romankit {

OutputFormat parse_format(std::string_view text) {
  if (text == "plain") return OutputFormat::plain;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw usage_error("unknown format '" + std::string(text) + "' (plain|csv|json)");
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {
      "roman-factorials", "roman-coefficients", "gamma-coefficients",
      "region-1", "region-2", "region-3", "region-4", "region-5", "region-6",
      "resistance",
  };
  return names;
}

namespace {

std::vector<std::int64_t> descending(std::int64_t from, std::int64_t to) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = from; i >= to; --i) v.push_back(i);
  return v;
}

std::vector<std::int64_t> ascending(std::int64_t from, std::int64_t to) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = from; i <= to; ++i) v.push_back(i);
  return v;
}

Table coefficient_grid(std::string name, std::vector<std::int64_t> rows,
                       std::vector<std::int64_t> cols,
                       const std::function<std::optional<std::string>(std::int64_t, std::int64_t)>& cell) {
  Table t;
  t.name = std::move(name);
  t.rows = std::move(rows);
  t.cols = std::move(cols);
  for (std::int64_t n : t.rows) {
    std::vector<std::optional<std::string>> row;
    for (std::int64_t k : t.cols) row.push_back(cell(n, k));
    t.cells.push_back(std::move(row));
  }
  return t;
}

Table region_table(int region_id, std::vector<std::int64_t> rows,
                   std::vector<std::int64_t> cols) {
  Region wanted = static_cast<Region>(region_id);
  return coefficient_grid(
      "region-" + std::to_string(region_id), std::move(rows), std::move(cols),
      [wanted](std::int64_t n, std::int64_t k) -> std::optional<std::string> {
        if (classify_region(n, k) != wanted) return std::nullopt;
        return roman_coeff(n, k).str();
      });
}

}  // namespace

Table make_table(std::string_view name) {
  if (name == "roman-factorials") {
    Table t;
    t.name = "roman-factorials";
    t.rows = ascending(-6, 6);
    t.value_header = "factorial";
    for (std::int64_t n : t.rows) t.cells.push_back({roman_factorial(n).str()});
    return t;
  }
  if (name == "roman-coefficients") {
    return coefficient_grid("roman-coefficients", descending(6, -5), ascending(-4, 6),
                            [](std::int64_t n, std::int64_t k) {
                              return std::optional<std::string>(roman_coeff(n, k).str());
                            });
  }
  if (name == "gamma-coefficients") {
    return coefficient_grid("gamma-coefficients", descending(6, -5), ascending(-4, 6),
                            [](std::int64_t n, std::int64_t k) {
                              return std::optional<std::string>(to_string(gamma_coeff(n, k)));
                            });
  }
  if (name == "region-1") return region_table(1, descending(7, 0), ascending(0, 7));
  if (name == "region-2") return region_table(2, descending(-1, -5), ascending(0, 6));
  if (name == "region-3") return region_table(3, descending(-1, -6), ascending(-6, -1));
  if (name == "region-4") return region_table(4, descending(6, 0), ascending(1, 7));
  if (name == "region-5") return region_table(5, descending(6, 0), ascending(-4, -1));
  if (name == "region-6") return region_table(6, descending(-2, -7), ascending(-6, -1));
  if (name == "resistance") {
    Table t;
    t.name = "resistance";
    t.rows = ascending(0, 7);
    t.value_header = "R";
    for (std::int64_t n : t.rows) t.cells.push_back({resistance_direct(n).ohms.str()});
    t.row_marks[7] = "*";
    t.notes.push_back(
        "* derived from the definitions; the published table prints 151/340 "
        "(see: romankit ledger)");
    return t;
  }
  throw usage_error("unknown table '" + std::string(name) + "'");
}

namespace {

std::string render_plain(const Table& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header;
  if (t.cols.empty()) {
    header = {"n", t.value_header};
    for (size_t r = 0; r < t.rows.size(); ++r) {
      std::string value = t.cells[r][0] ? *t.cells[r][0] : "";
      auto mark = t.row_marks.find(t.rows[r]);
      if (mark != t.row_marks.end()) value += " " + mark->second;
      grid.push_back({std::to_string(t.rows[r]), value});
    }
  } else {
    header.push_back("n\\k");
    for (std::int64_t k : t.cols) header.push_back(std::to_string(k));
    for (size_t r = 0; r < t.rows.size(); ++r) {
      std::vector<std::string> row{std::to_string(t.rows[r])};
      for (size_t c = 0; c < t.cols.size(); ++c)
        row.push_back(t.cells[r][c] ? *t.cells[r][c] : "");
      grid.push_back(std::move(row));
    }
  }

  std::vector<size_t> width(header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  widen(header);
  for (const auto& row : grid) widen(row);

  std::string out = t.name + "\n";
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out += std::string(width[i] - row[i].size(), ' ') + row[i];
    }
    out += "\n";
  };
  emit(header);
  for (const auto& row : grid) emit(row);
  for (const auto& note : t.notes) out += note + "\n";
  return out;
}

std::string render_csv(const Table& t) {
  std::string out;
  if (t.cols.empty()) {
    out += "n," + t.value_header + "\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
      out += std::to_string(t.rows[r]) + "," + (t.cells[r][0] ? *t.cells[r][0] : "") + "\n";
    }
    return out;
  }
  out += "n";
  for (std::int64_t k : t.cols) out += "," + std::to_string(k);
  out += "\n";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    out += std::to_string(t.rows[r]);
    for (size_t c = 0; c < t.cols.size(); ++c) {
      out += ",";
      if (t.cells[r][c]) out += *t.cells[r][c];
    }
    out += "\n";
  }
  return out;
}

std::string render_json(const Table& t) {
  nlohmann::ordered_json doc;
  doc["table"] = t.name;
  doc["rows"] = nlohmann::ordered_json::array();
  for (size_t r = 0; r < t.rows.size(); ++r) {
    nlohmann::ordered_json row;
    row["n"] = t.rows[r];
    if (t.cols.empty()) {
      row["value"] = t.cells[r][0] ? *t.cells[r][0] : "";
    } else {
      row["cells"] = nlohmann::ordered_json::array();
      for (size_t c = 0; c < t.cols.size(); ++c) {
        if (!t.cells[r][c]) continue;
        row["cells"].push_back({{"k", t.cols[c]}, {"value", *t.cells[r][c]}});
      }
    }
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_table(const Table& t, OutputFormat format) {
  switch (format) {
    case OutputFormat::plain: return render_plain(t);
    case OutputFormat::csv: return render_csv(t);
    case OutputFormat::json: return render_json(t);
  }
  throw usage_error("bad format");
}

}  // namespace romankit
