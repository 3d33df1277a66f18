#include "romankit/published.hpp"

#include <sstream>

namespace romankit {

namespace {

std::vector<std::int64_t> seq(std::int64_t from, std::int64_t to) {
  std::vector<std::int64_t> v;
  std::int64_t step = from <= to ? 1 : -1;
  for (std::int64_t i = from;; i += step) {
    v.push_back(i);
    if (i == to) break;
  }
  return v;
}

// Rows are given as space-separated printed cells; "." marks a blank.
std::vector<std::vector<std::optional<std::string>>> parse_rows(
    const std::vector<std::string>& rows) {
  std::vector<std::vector<std::optional<std::string>>> out;
  for (const auto& line : rows) {
    std::istringstream in(line);
    std::vector<std::optional<std::string>> row;
    std::string cell;
    while (in >> cell) {
      if (cell == ".") {
        row.emplace_back(std::nullopt);
      } else {
        row.emplace_back(cell);
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<PublishedTable> build() {
  std::vector<PublishedTable> tables;

  tables.push_back({"roman-factorials",
                    "figure: Roman Factorials",
                    seq(-6, 6),
                    {},
                    parse_rows({"-1/120", "1/24", "-1/6", "1/2", "-1", "1", "1",
                                "1", "2", "6", "24", "120", "720"})});

  tables.push_back(
      {"roman-coefficients",
       "figure: Roman Coefficients",
       seq(6, -5),
       seq(-4, 6),
       parse_rows({
           "-1/840 1/252 -1/56 1/7 1 6 15 20 15 6 1",
           "-1/504 1/168 -1/42 1/6 1 5 10 10 5 1 1/6",
           "-1/280 1/105 -1/30 1/5 1 4 6 4 1 1/5 -1/30",
           "-1/140 1/60 -1/20 1/4 1 3 3 1 1/4 -1/20 1/60",
           "-1/80 1/30 -1/12 1/3 1 2 1 1/3 -1/12 1/30 -1/60",
           "-1/20 1/12 -1/6 1/2 1 1 1/2 -1/6 1/12 -1/20 1/30",
           "-1/4 1/3 -1/2 1 1 1 -1/2 1/3 -1/4 1/5 -1/6",
           "-1 1 -1 1 1 -1 1 -1 1 -1 1",
           "3 -2 1 -1 1 -2 3 -4 5 -6 7",
           "-3 1 -1/2 -1/2 1 -3 6 -10 15 -21 28",
           "1 -1/3 -1/6 -1/3 1 -4 10 -20 35 -56 84",
           "-1/4 -1/12 -1/12 -1/4 1 -5 15 -35 70 -126 210",
       })});

  tables.push_back({"gamma-coefficients",
                    "figure: Gamma-Coefficient",
                    seq(6, -5),
                    seq(-4, 6),
                    parse_rows({
                        "0 0 0 0 1 6 15 20 15 6 1",
                        "0 0 0 0 1 5 10 10 5 1 0",
                        "0 0 0 0 1 4 6 4 1 0 0",
                        "0 0 0 0 1 3 3 1 0 0 0",
                        "0 0 0 0 1 2 1 0 0 0 0",
                        "0 0 0 0 1 1 0 0 0 0 0",
                        "0 0 0 0 1 0 0 0 0 0 0",
                        "-1 1 -1 1 1 -1 1 -1 1 -1 1",
                        "3 -2 1 0 1 -2 3 -4 5 -6 7",
                        "-3 1 0 0 1 -3 6 -10 15 -21 28",
                        "1 0 0 0 1 -4 10 -20 35 -56 84",
                        "0 0 0 0 1 -5 15 -35 70 -126 210",
                    })});

  tables.push_back({"region-1",
                    "figure: Region 1",
                    seq(7, 0),
                    seq(0, 7),
                    parse_rows({
                        "1 7 21 35 35 21 7 1",
                        "1 6 15 20 15 6 1 .",
                        "1 5 10 10 5 1 . .",
                        "1 4 6 4 1 . . .",
                        "1 3 3 1 . . . .",
                        "1 2 1 . . . . .",
                        "1 1 . . . . . .",
                        "1 . . . . . . .",
                    })});

  tables.push_back({"region-2",
                    "figure: Region 2",
                    seq(-1, -5),
                    seq(0, 6),
                    parse_rows({
                        "1 -1 1 -1 1 -1 1",
                        "1 -2 3 -4 5 -6 7",
                        "1 -3 6 -10 15 -21 28",
                        "1 -4 10 -20 35 -56 84",
                        "1 -5 15 -35 70 -126 210",
                    })});

  tables.push_back({"region-3",
                    "figure: Region 3",
                    seq(-1, -6),
                    seq(-6, -1),
                    parse_rows({
                        "-1 1 -1 1 -1 1",
                        "5 -4 3 -2 1 .",
                        "-10 6 -3 1 . .",
                        "10 -4 1 . . .",
                        "-5 1 . . . .",
                        "1 . . . . .",
                    })});

  tables.push_back({"region-4",
                    "figure: Region 4",
                    seq(6, 0),
                    seq(1, 7),
                    parse_rows({
                        ". . . . . . 1/7",
                        ". . . . . 1/6 -1/42",
                        ". . . . 1/5 -1/30 1/105",
                        ". . . 1/4 -1/20 1/60 -1/140",
                        ". . 1/3 -1/12 1/30 -1/60 1/105",
                        ". 1/2 -1/6 1/12 -1/20 1/30 -1/42",
                        "1 -1/2 1/3 -1/4 1/5 -1/6 1/7",
                    })});

  tables.push_back({"region-5",
                    "figure: Region 5",
                    seq(6, 0),
                    seq(-4, -1),
                    parse_rows({
                        "-1/840 1/252 -1/56 1/7",
                        "-1/504 1/168 -1/42 1/6",
                        "-1/280 1/105 -1/30 1/5",
                        "-1/140 1/60 -1/20 1/4",
                        "-1/80 1/30 -1/12 1/3",
                        "-1/20 1/12 -1/6 1/2",
                        "-1/4 1/3 -1/2 1",
                    })});

  tables.push_back({"region-6",
                    "figure: Region 6",
                    seq(-2, -7),
                    seq(-6, -1),
                    parse_rows({
                        ". . . . . -1",
                        ". . . . -1/2 -1/2",
                        ". . . -1/3 -1/6 -1/3",
                        ". . -1/4 -1/12 -1/12 -1/4",
                        ". -1/5 -1/20 -1/30 -1/20 -1/5",
                        "-1/6 -1/30 -1/60 -1/60 -1/30 -1/6",
                    })});

  tables.push_back({"resistance",
                    "figure: Resistance of the n-cube",
                    seq(0, 7),
                    {},
                    parse_rows({"0", "1", "1", "5/6", "2/3", "8/15", "13/30", "151/340"})});

  return tables;
}

}  // namespace

const std::vector<PublishedTable>& published_tables() {
  static const std::vector<PublishedTable> tables = build();
  return tables;
}

const PublishedTable* find_published_table(std::string_view name) {
  for (const auto& t : published_tables()) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

}  // namespace romankit
