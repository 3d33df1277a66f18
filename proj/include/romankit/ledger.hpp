#pragma once

#include <string>
#include <vector>

#include "romankit/tables.hpp"

namespace romankit {

// One verified disagreement between a published value or formula and what
// the definitions derive.
struct LedgerEntry {
  std::string key;       // stable identifier, e.g. "resistance-table n=7"
  std::string location;  // where the published form appears
  std::string published;
  std::string derived;
  std::string detail;
};

// Machine-generated: diffs every published table against the generated
// one, then appends the verified formula-level discrepancies.
std::vector<LedgerEntry> discrepancy_ledger();

std::string render_ledger(const std::vector<LedgerEntry>& entries, OutputFormat format);

}  // namespace romankit
