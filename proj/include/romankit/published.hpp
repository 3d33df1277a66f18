#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace romankit {

// One table exactly as printed in the published source this library
// reproduces. Cells hold the printed text; nullopt marks positions the
// figure leaves blank. Used only to diff against generated values —
// nothing here feeds the computations.
struct PublishedTable {
  std::string name;      // matches the generated table of the same name
  std::string location;  // which published figure it is
  std::vector<std::int64_t> rows;
  std::vector<std::int64_t> cols;  // empty for 1-D tables
  std::vector<std::vector<std::optional<std::string>>> cells;
};

const std::vector<PublishedTable>& published_tables();
const PublishedTable* find_published_table(std::string_view name);

}  // namespace romankit
