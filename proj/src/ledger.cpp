#include "romankit/ledger.hpp"

#include <json.hpp>

#include "romankit/published.hpp"

namespace romankit {

std::vector<LedgerEntry> discrepancy_ledger() {
  std::vector<LedgerEntry> entries;

  // Cell-level diffs: generated tables against the published prints.
  for (const auto& pub : published_tables()) {
    Table gen = make_table(pub.name);
    for (size_t r = 0; r < pub.rows.size(); ++r) {
      for (size_t c = 0; c < pub.cells[r].size(); ++c) {
        const auto& printed = pub.cells[r][c];
        const auto& derived = gen.cells[r][c];
        if (printed == derived) continue;
        LedgerEntry e;
        if (pub.cols.empty()) {
          e.key = pub.name + "-table n=" + std::to_string(pub.rows[r]);
        } else {
          e.key = pub.name + " n=" + std::to_string(pub.rows[r]) +
                  " k=" + std::to_string(pub.cols[c]);
        }
        e.location = pub.location;
        e.published = printed ? *printed : "(blank)";
        e.derived = derived ? *derived : "(blank)";
        e.detail = "generated value disagrees with the published cell";
        entries.push_back(std::move(e));
      }
    }
  }

  // Formula-level discrepancies, each verified by the test suite.
  entries.push_back({
      "knuth-factorial-product",
      "factorial product proposition",
      "sign (-1)^n: |n]! |-n]! = (-1)^n |n|",
      "sign (-1)^(n+1): |n]! |-n]! = (-1)^(n+1) n for n >= 1, and 1 at n = 0",
      "the published factorial table itself gives |2]! |-2]! = 2 * (-1) = -2, not +2",
  });
  entries.push_back({
      "romans-identity",
      "Roman's identity proposition",
      "|n choose k] |k choose n] = (-1)^(n+k) / |n-k|",
      "|n choose k] |k choose n] = (-1)^(n+k+1) / |n-k|",
      "follows from the corrected factorial product; e.g. at (2,0) the product is -1/2",
  });
  entries.push_back({
      "region-5 third form",
      "six-regions proposition, region 5",
      "(-1)^(k+1)/(n+1) * C(n-k-1, n+1)^-1",
      "(-1)^(k+1)/(n+1) * C(n-k, n+1)^-1",
      "the printed upper index makes the binomial vanish at (n,k) = (n, -1)",
  });
  entries.push_back({
      "region-6 cross-region forms",
      "six-regions proposition, region 6",
      "(-1)^(k+1) |k-n-1 choose -n-1] and (-1)^(k+1) |k-n-1 choose k]",
      "(-1)^k |k-n-1 choose -n-1] and (-1)^k |k-n-1 choose k]",
      "e.g. |-3 choose -2] = -1/2 = (+1) * |0 choose 2], not (-1) * |0 choose 2]",
  });
  entries.push_back({
      "region-4 series prefactor",
      "six-regions proposition, region 4",
      "(-1)^(n+k+1) n sum_j S(j,n)/k^(j+1)",
      "(-1)^(n+k+1) n! sum_j S(j,n)/k^(j+1)",
      "sum_j S(j,n) x^j = x^n / ((1-x)...(1-nx)) forces the n! prefactor; "
      "with n the series sums to |n choose k]/(n-1)!",
  });
  entries.push_back({
      "level-resistance sign",
      "n-cube proof",
      "level resistance (-1)^(n+i) |i choose n]",
      "level resistance (-1)^(n+i+1) |i choose n]",
      "the printed sign makes the level resistances negative",
  });

  return entries;
}

std::string render_ledger(const std::vector<LedgerEntry>& entries, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
      doc.push_back({{"key", e.key},
                     {"location", e.location},
                     {"published", e.published},
                     {"derived", e.derived},
                     {"detail", e.detail}});
    }
    return doc.dump(2) + "\n";
  }
  if (format == OutputFormat::csv) {
    auto quote = [](const std::string& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') out += '"';
        out += c;
      }
      return out + "\"";
    };
    std::string out = "key,location,published,derived,detail\n";
    for (const auto& e : entries) {
      out += quote(e.key) + "," + quote(e.location) + "," + quote(e.published) + "," +
             quote(e.derived) + "," + quote(e.detail) + "\n";
    }
    return out;
  }
  std::string out;
  for (const auto& e : entries) {
    out += e.key + ": published " + e.published + ", derived " + e.derived + "\n";
    out += "    where: " + e.location + "\n";
    out += "    note:  " + e.detail + "\n";
  }
  return out;
}

}  // namespace romankit
