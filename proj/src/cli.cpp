#include "romankit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

#include <json.hpp>

#include "romankit/coefficients.hpp"
#include "romankit/errors.hpp"
#include "romankit/identities.hpp"
#include "romankit/ledger.hpp"
#include "romankit/tables.hpp"

namespace romankit {

namespace {

constexpr std::string_view kUsage = R"(romankit - exact generalized factorials and binomial coefficients

usage: romankit <command> [args] [--format plain|csv|json] [--out <path>]

commands:
  eval <scheme> <n> <k>      evaluate |n choose k] under a scheme;
                             <k> may be a multi-index like 2,2,-1
                             schemes: roman | knuth | gamma | trivial | q:<rational>
  table <name>               print a table computed from the definitions
                             names: roman-factorials | roman-coefficients |
                             gamma-coefficients | region-1..region-6 | resistance
  verify <identity|all> [<lo>..<hi>] [<scheme>]
                             sweep an identity over a grid (default -15..15, roman)
                             identities: complementation | iterative | pascal |
                             pascal-gamma | corollary-sum | rotation-reflection |
                             romans-identity | knuth-factorial-product
  ledger                     list where the published tables and identities
                             disagree with the values derived from the definitions

exit codes: 0 ok / all held, 1 identity failures, 2 usage error, 3 domain error
)";

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw usage_error("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

GridBounds parse_bounds(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw usage_error("bounds must look like <lo>..<hi>, got '" + std::string(text) + "'");
  }
  GridBounds b{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (b.lo > b.hi) throw usage_error("bounds are empty");
  return b;
}

struct ParsedArgs {
  std::vector<std::string> positionals;
  OutputFormat format = OutputFormat::plain;
  std::optional<std::string> out_path;
};

ParsedArgs parse_args(const std::vector<std::string>& args) {
  ParsedArgs p;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto take_value = [&](std::string_view flag) -> std::string {
      if (a.size() > flag.size() && a[flag.size()] == '=') {
        return a.substr(flag.size() + 1);
      }
      if (i + 1 >= args.size()) throw usage_error(std::string(flag) + " needs a value");
      return args[++i];
    };
    if (a == "--format" || a.rfind("--format=", 0) == 0) {
      p.format = parse_format(take_value("--format"));
    } else if (a == "--out" || a.rfind("--out=", 0) == 0) {
      p.out_path = take_value("--out");
    } else if (a == "--help" || a == "-h" || a == "help") {
      p.positionals.insert(p.positionals.begin(), "help");
    } else if (a.rfind("--", 0) == 0) {
      throw usage_error("unknown option '" + a + "'");
    } else {
      p.positionals.push_back(a);
    }
  }
  return p;
}

void emit(const ParsedArgs& args, const std::string& text) {
  if (args.out_path) {
    std::ofstream out(*args.out_path, std::ios::binary);
    if (!out) throw usage_error("cannot open '" + *args.out_path + "' for writing");
    out << text;
  } else {
    std::cout << text;
  }
}

int cmd_eval(const ParsedArgs& args) {
  if (args.positionals.size() != 4) {
    throw usage_error("eval needs <scheme> <n> <k>");
  }
  CoeffScheme scheme = CoeffScheme::parse(args.positionals[1]);
  std::int64_t n = parse_int(args.positionals[2]);
  const std::string& k_text = args.positionals[3];

  std::string value;
  nlohmann::ordered_json jk;
  if (k_text.find(',') != std::string::npos) {
    MultiIndex beta = MultiIndex::parse(k_text);
    value = scheme.multinomial(n, beta).str();
    jk = nlohmann::ordered_json::array();
    for (auto e : beta.entries()) jk.push_back(e);
  } else {
    std::int64_t k = parse_int(k_text);
    value = scheme.coeff(n, k).str();
    jk = k;
  }

  if (args.format == OutputFormat::json) {
    nlohmann::ordered_json doc{{"scheme", scheme.name()}, {"n", n}, {"k", jk}, {"value", value}};
    emit(args, doc.dump(2) + "\n");
  } else {
    emit(args, value + "\n");
  }
  return 0;
}

int cmd_table(const ParsedArgs& args) {
  if (args.positionals.size() != 2) throw usage_error("table needs exactly one name");
  Table t = make_table(args.positionals[1]);
  emit(args, render_table(t, args.format));
  return 0;
}

std::string render_reports_plain(const std::vector<GridReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += "identity=" + r.identity + " scheme=" + r.scheme + " bounds=[" +
           std::to_string(r.bounds.lo) + "," + std::to_string(r.bounds.hi) + "]" +
           " applicable=" + std::to_string(r.applicable) +
           " held=" + std::to_string(r.held) + " failed=" + std::to_string(r.failed) + "\n";
    for (const auto& f : r.failures) {
      out += "  FAIL args=(";
      for (size_t i = 0; i < f.args.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f.args[i]);
      }
      out += ") lhs=" + f.lhs + " rhs=" + f.rhs + "\n";
    }
  }
  return out;
}

nlohmann::ordered_json report_to_json(const GridReport& r) {
  nlohmann::ordered_json doc;
  doc["identity"] = r.identity;
  doc["bounds"] = {r.bounds.lo, r.bounds.hi};
  doc["scheme"] = r.scheme;
  doc["applicable"] = r.applicable;
  doc["held"] = r.held;
  doc["failed"] = r.failed;
  doc["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    doc["failures"].push_back({{"args", f.args}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return doc;
}

std::string render_reports_csv(const std::vector<GridReport>& reports) {
  std::string out = "identity,scheme,lo,hi,applicable,held,failed\n";
  for (const auto& r : reports) {
    out += r.identity + "," + r.scheme + "," + std::to_string(r.bounds.lo) + "," +
           std::to_string(r.bounds.hi) + "," + std::to_string(r.applicable) + "," +
           std::to_string(r.held) + "," + std::to_string(r.failed) + "\n";
  }
  return out;
}

int cmd_verify(const ParsedArgs& args) {
  if (args.positionals.size() < 2 || args.positionals.size() > 4) {
    throw usage_error("verify needs <identity|all> [<lo>..<hi>] [<scheme>]");
  }
  const std::string& which = args.positionals[1];
  GridBounds bounds{-15, 15};
  CoeffScheme scheme = CoeffScheme::factorial(FactorialScheme::roman());
  if (args.positionals.size() >= 3) bounds = parse_bounds(args.positionals[2]);
  if (args.positionals.size() == 4) scheme = CoeffScheme::parse(args.positionals[3]);

  std::vector<std::string> names;
  if (which == "all") {
    names = identity_names();
  } else {
    const auto& known = identity_names();
    if (std::find(known.begin(), known.end(), which) == known.end()) {
      throw usage_error("unknown identity '" + which + "'");
    }
    names = {which};
  }

  std::vector<GridReport> reports;
  for (const auto& name : names) reports.push_back(verify_grid(name, bounds, scheme));

  if (args.format == OutputFormat::json) {
    if (reports.size() == 1) {
      emit(args, report_to_json(reports[0]).dump(2) + "\n");
    } else {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& r : reports) doc.push_back(report_to_json(r));
      emit(args, doc.dump(2) + "\n");
    }
  } else if (args.format == OutputFormat::csv) {
    emit(args, render_reports_csv(reports));
  } else {
    emit(args, render_reports_plain(reports));
  }

  for (const auto& r : reports) {
    if (r.failed > 0) return 1;
  }
  return 0;
}

int cmd_ledger(const ParsedArgs& args) {
  if (args.positionals.size() != 1) throw usage_error("ledger takes no arguments");
  emit(args, render_ledger(discrepancy_ledger(), args.format));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  try {
    ParsedArgs parsed = parse_args(args);
    if (parsed.positionals.empty()) {
      std::cerr << kUsage;
      return 2;
    }
    const std::string& command = parsed.positionals.front();
    if (command == "help") {
      std::cout << kUsage;
      return 0;
    }
    if (command == "eval") return cmd_eval(parsed);
    if (command == "table") return cmd_table(parsed);
    if (command == "verify") return cmd_verify(parsed);
    if (command == "ledger") return cmd_ledger(parsed);
    throw usage_error("unknown command '" + command + "'");
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const math_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args);
}

}  // namespace romankit
