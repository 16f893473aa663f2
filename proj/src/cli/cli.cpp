#include "qmock/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "qmock/error.hpp"
#include "qmock/harness/harness.hpp"
#include "qmock/numerics/numerics.hpp"
#include "qmock/partitions/partitions.hpp"
#include "qmock/qlaurent/json.hpp"

namespace qmock::cli {

namespace {

using nlohmann::ordered_json;
using qlaurent::Rational;

struct RunConfig {
  std::string command;
  std::vector<std::string> ids;
  bool all = false;
  std::string order;
  std::string mode = "generic";
  std::vector<std::string> points;
  std::string kind;
  int max_n = 0;
  int enumeration_cap = 0;
  double tol = numerics::kDefaultTol;
  std::uint64_t seed = 7;
  int count = 20;
  double min_im = 0.5;
  std::string side = "lhs";
  int check = 0;
  std::string format = "text";
  bool no_timing = false;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Turns `key = value` lines into `--key value` arguments.
std::vector<std::string> config_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open config file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw PreconditionError("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw PreconditionError("config line without a key: " + line);
    if (value == "true") {
      out.push_back("--" + key);
    } else if (value != "false") {
      out.push_back("--" + key);
      out.push_back(value);
    }
  }
  return out;
}

// Moves `--config PATH` out of args and splices the file's flags in right
// after the command name, so later command-line flags override them.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (!path) return args;
  const auto extra = config_args(*path);
  const auto at = args.empty() ? args.end() : args.begin() + 1;
  args.insert(at, extra.begin(), extra.end());
  return args;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

ordered_json complex_json(std::complex<double> z) { return ordered_json::array({z.real(), z.imag()}); }

void check_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw PreconditionError("format '" + cfg.format + "' is not available for " + cfg.command);
}

// Splits on commas outside parentheses, so zeta(4,1) stays whole.
std::vector<std::string> split_points(const std::string& text) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"text", "json"});
  if (cfg.all == !cfg.ids.empty()) throw PreconditionError("verify needs exactly one of --id or --all");
  const harness::Mode mode = harness::mode_from_string(cfg.mode);
  std::optional<Rational> order;
  if (!cfg.order.empty()) {
    order = exactring::parse_rational(cfg.order);
    qlaurent::to_lattice(*order);
  }
  std::vector<harness::Point> points;
  for (const auto& arg : cfg.points) {
    for (const auto& p : split_points(arg)) points.push_back(harness::parse_point(p));
  }
  if (!points.empty() && mode != harness::Mode::kSpecialize) {
    throw PreconditionError("--points needs --mode specialize");
  }
  const auto reports = cfg.all ? harness::verify_all(order, mode, points) : harness::verify_ids(cfg.ids, order, mode, points);

  bool ok = true;
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    if (cfg.format == "json") {
      ordered_json j;
      j["id"] = r.id;
      j["order"] = r.order.get_str();
      j["mode"] = harness::to_string(r.mode);
      j["verdict"] = r.equal ? "pass" : "fail";
      if (r.first_mismatch) {
        j["first_mismatch"] = {{"q_exp", r.first_mismatch->q_exp.get_str()},
                               {"lhs", r.first_mismatch->lhs},
                               {"rhs", r.first_mismatch->rhs}};
      } else {
        j["first_mismatch"] = nullptr;
      }
      j["ms"] = cfg.no_timing ? 0.0 : std::round(r.ms * 1000) / 1000;
      if (r.expect_mismatch) j["asserted"] = "fail";
      arr.push_back(j);
      continue;
    }
    out << std::left << std::setw(24) << r.id << ' ' << (r.equal ? "pass" : "FAIL") << "  order " << r.order.get_str()
        << "  " << harness::to_string(r.mode);
    if (r.expect_mismatch) out << "  (asserted to fail: " << (r.ok() ? "ok" : "UNEXPECTED PASS") << ")";
    if (!cfg.no_timing) out << "  " << fmt_double(r.ms) << " ms";
    out << '\n';
    if (r.first_mismatch) {
      const auto& m = *r.first_mismatch;
      out << "    first mismatch at q^" << m.q_exp.get_str();
      if (!m.check.empty()) out << " [" << m.check << "]";
      if (!m.point.empty()) out << " at " << m.point;
      out << ": " << m.lhs << " vs " << m.rhs << '\n';
    }
    for (const auto& note : r.notes) out << "    " << note << '\n';
  }
  if (cfg.format == "json") out << arr.dump(2) << '\n';
  return ok ? kOk : kAssertionFailed;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"text", "json", "csv"});
  if (cfg.enumeration_cap > 0) partitions::set_enumeration_cap(cfg.enumeration_cap);
  if (cfg.max_n < 0) throw PreconditionError("--n must be non-negative");
  const auto table = partitions::stat_table(partitions::stat_kind_from_string(cfg.kind), cfg.max_n);
  if (cfg.format == "csv") {
    out << table.to_csv();
  } else if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (int n = 0; n <= cfg.max_n; ++n) {
      for (const auto& [m, c] : table.column(n)) arr.push_back({{"m", m}, {"n", n}, {"count", c}});
    }
    out << arr.dump(2) << '\n';
  } else {
    out << std::right << std::setw(6) << "m" << std::setw(6) << "n" << std::setw(16) << "count" << '\n';
    for (int n = 0; n <= cfg.max_n; ++n) {
      for (const auto& [m, c] : table.column(n)) out << std::setw(6) << m << std::setw(6) << n << std::setw(16) << c << '\n';
    }
  }
  return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"text", "json", "csv"});
  const auto rep = harness::scan(harness::scan_kind_from_string(cfg.kind), cfg.max_n);
  if (cfg.format == "json") {
    ordered_json j;
    j["scan"] = harness::to_string(rep.kind);
    j["max"] = rep.max_n;
    j["asserted"] = rep.asserted;
    j["pass"] = rep.pass;
    j["rows"] = ordered_json::array();
    for (const auto& r : rep.rows) {
      j["rows"].push_back({{"n", r.n}, {"value", r.value}, {"sign", r.sign}, {"flag", r.flag}});
    }
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "n,value,sign,flag\n";
    for (const auto& r : rep.rows) out << r.n << ',' << r.value << ',' << r.sign << ',' << r.flag << '\n';
  } else {
    out << std::right << std::setw(5) << "n" << std::setw(26) << "value" << "  sign  flag\n";
    for (const auto& r : rep.rows) {
      out << std::setw(5) << r.n << std::setw(26) << r.value << "  " << std::setw(4) << std::left << r.sign << std::right;
      if (!r.flag.empty()) out << "  <- " << r.flag;
      out << '\n';
    }
    out << harness::to_string(rep.kind) << ": " << (rep.asserted ? (rep.pass ? "pass" : "FAIL") : "informational")
        << '\n';
  }
  return rep.asserted && !rep.pass ? kAssertionFailed : kOk;
}

int cmd_numeric(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"text", "json"});
  if (cfg.count <= 0) throw PreconditionError("--count must be positive");
  if (!(cfg.tol > 0)) throw PreconditionError("--tol must be positive");
  if (!(cfg.min_im >= numerics::kMinImTau)) {
    throw PreconditionError("--min-im must be at least " + fmt_double(numerics::kMinImTau));
  }
  const auto points = numerics::random_points(cfg.seed, cfg.count, cfg.min_im);
  auto rows = numerics::law_batch(points, cfg.tol);
  rows.push_back(numerics::r_derivative_check());
  bool ok = true;
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ok = ok && r.pass;
    if (cfg.format == "json") {
      arr.push_back({{"law", r.law},
                     {"point", {{"tau", complex_json(r.point.tau)}, {"u", complex_json(r.point.u)}, {"v", complex_json(r.point.v)}}},
                     {"residual", r.residual},
                     {"tol", r.tol},
                     {"pass", r.pass}});
    } else {
      out << std::left << std::setw(14) << r.law << " tau=" << std::setw(24) << fmt_double(r.point.tau.real()) + "+" +
                                                                  fmt_double(r.point.tau.imag()) + "i"
          << " residual " << std::setw(12) << fmt_double(r.residual) << (r.pass ? "pass" : "FAIL") << '\n';
    }
  }
  if (cfg.format == "json") {
    out << arr.dump(2) << '\n';
  } else {
    out << rows.size() << " residuals, " << (ok ? "all pass" : "FAILURES") << '\n';
  }
  return ok ? kOk : kAssertionFailed;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"text", "json"});
  if (cfg.ids.size() != 1) throw PreconditionError("export-series needs exactly one --id");
  const auto& spec = harness::lookup(cfg.ids.front());
  if (cfg.check < 0 || cfg.check >= static_cast<int>(spec.checks.size())) {
    throw PreconditionError("--check out of range for " + spec.id);
  }
  if (cfg.side != "lhs" && cfg.side != "rhs") throw PreconditionError("--side must be lhs or rhs");
  const Rational order = cfg.order.empty() ? spec.default_order : exactring::parse_rational(cfg.order);
  const std::int64_t o = qlaurent::to_lattice(order);
  const auto& check = spec.checks[static_cast<std::size_t>(cfg.check)];
  const auto series = (cfg.side == "lhs" ? check.lhs : check.rhs)(o).truncated(o);
  if (cfg.format == "json") {
    ordered_json j;
    j["id"] = spec.id;
    j["side"] = cfg.side;
    j["check"] = check.label;
    j["order"] = order.get_str();
    j["series"] = qlaurent::to_json(series);
    out << j.dump(2) << '\n';
  } else {
    out << spec.id << ' ' << cfg.side << " below q^" << order.get_str() << ":\n" << series.to_string() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact and numeric checks of mock theta identities", "qmock"};
  app.require_subcommand(1);
  app.option_defaults()->take_last();

  auto* verify = app.add_subcommand("verify", "Verify registered identities exactly");
  verify->add_option("--id", cfg.ids, "Identity id (repeatable)");
  verify->add_flag("--all", cfg.all, "Every registered identity");
  verify->add_option("--order", cfg.order, "Compare coefficients of q^e for e below this (p/q)");
  verify->add_option("--mode", cfg.mode, "generic or specialize");
  verify->add_option("--points", cfg.points, "Specialization points, e.g. w=4/9,w=zeta(4,1)");
  verify->add_flag("--no-timing", cfg.no_timing, "Report ms as 0 for reproducible output");

  auto* table = app.add_subcommand("table", "Rank or crank counts by enumeration");
  table->add_option("kind", cfg.kind, "rank, crank-combinatorial or crank-convention")->required();
  table->add_option("--n", cfg.max_n, "Largest n")->required();
  table->add_option("--cap", cfg.enumeration_cap, "Raise the enumeration cap");

  auto* scan = app.add_subcommand("scan", "Congruence or sign scan over n");
  scan->add_option("kind", cfg.kind, "m2-congruence or n6-sign")->required();
  scan->add_option("--max", cfg.max_n, "Largest n")->required();

  auto* numeric = app.add_subcommand("numeric-check", "Transformation-law residuals at seeded points");
  numeric->add_option("--tol", cfg.tol, "Residual tolerance");
  numeric->add_option("--seed", cfg.seed, "Random seed");
  numeric->add_option("--count", cfg.count, "Number of points");
  numeric->add_option("--min-im", cfg.min_im, "Smallest Im(tau)");

  auto* exporter = app.add_subcommand("export-series", "Print one side of an identity as exact JSON or text");
  exporter->add_option("--id", cfg.ids, "Identity id")->required();
  exporter->add_option("--side", cfg.side, "lhs or rhs");
  exporter->add_option("--check", cfg.check, "Index of the check within the entry");
  exporter->add_option("--order", cfg.order, "Truncation order (p/q)");

  for (auto* sub : {verify, table, scan, numeric, exporter}) {
    sub->add_option("--format", cfg.format, "text, json or csv");
  }

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (table->parsed()) return cmd_table(cfg, out);
    if (scan->parsed()) return cmd_scan(cfg, out);
    if (numeric->parsed()) return cmd_numeric(cfg, out);
    return cmd_export(cfg, out);
  } catch (const Error& e) {
    // Unknown ids, caps, bad arguments and domain problems are usage errors.
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace qmock::cli
