// Command-line front end: bounds for one instance, spectra, fixture
// verification and graph export.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "scb/error.hpp"
#include "scb/tables.hpp"

#ifndef SCB_FIXTURE_DIR
#define SCB_FIXTURE_DIR "data/fixtures"
#endif

namespace {

using namespace scb;

struct InstanceArgs {
  std::string metric;
  int m = 0;
  int n = 0;
  int q = 0;
  int b = 0;
  std::string partition;
  std::string family = "hamming";
  int k = -1;
  int d = -1;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a, bool with_k) {
  cmd->add_option("metric", a.metric, "city-block | projective | phase-rotation | block | cyclic-burst | varshamov")
      ->required()
      ->check(CLI::IsMember({"city-block", "projective", "phase-rotation", "block", "cyclic-burst", "varshamov"}));
  cmd->add_option("--m", a.m, "city block alphabet size");
  cmd->add_option("--n", a.n, "length");
  cmd->add_option("--q", a.q, "field order");
  cmd->add_option("--b", a.b, "burst width");
  cmd->add_option("--partition", a.partition, "block partition, e.g. {{1,2},{3}}");
  cmd->add_option("--family", a.family, "projective family")->check(CLI::IsMember({"hamming", "phase-rotation"}));
  if (with_k) {
    auto* k = cmd->add_option("--k", a.k, "k (codes of minimum distance k+1)");
    auto* d = cmd->add_option("--d", a.d, "minimum distance d (k = d-1)");
    k->excludes(d);
    d->excludes(k);
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParameter, what);
}

Instance make_instance(const InstanceArgs& a, bool with_k) {
  Instance inst;
  const std::string& mt = a.metric;
  if (mt == "city-block") {
    require(a.m > 0 && a.n > 0, "city-block needs --m and --n");
    inst.kind = MetricKind::CityBlock;
  } else if (mt == "projective") {
    require(a.q > 0 && a.n > 0, "projective needs --q and --n");
    inst.kind = MetricKind::Projective;
  } else if (mt == "phase-rotation") {
    require(a.q > 0 && a.n > 0, "phase-rotation needs --q and --n");
    inst.kind = MetricKind::PhaseRotation;
  } else if (mt == "block") {
    require(a.q > 0 && !a.partition.empty(), "block needs --q and --partition");
    inst.kind = MetricKind::Block;
    inst.partition = parse_partition(a.partition);
  } else if (mt == "cyclic-burst") {
    require(a.q > 0 && a.n > 0 && a.b > 0, "cyclic-burst needs --q, --n and --b");
    inst.kind = MetricKind::CyclicBurst;
  } else {
    require(a.n > 0, "varshamov needs --n");
    inst.kind = MetricKind::Varshamov;
  }
  inst.m = a.m;
  inst.n = a.n;
  inst.q = static_cast<std::uint32_t>(a.q);
  inst.b = a.b;
  inst.family = a.family;
  if (with_k) {
    require(a.k >= 0 || a.d >= 0, "one of --k or --d is required");
    inst.k = a.k >= 0 ? a.k : a.d - 1;
    require(inst.k >= 1, "k must be >= 1 (d >= 2)");
  }
  return inst;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_rows(std::ostream& os, const std::string& format, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (format == "csv") {
    auto quote = [](const std::string& s) {
      return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
    };
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << quote(header[i]);
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << quote(r[i]);
      os << "\n";
    }
    return;
  }
  os << "|";
  for (const auto& h : header) os << " " << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) {
    os << "|";
    for (const auto& c : r) os << " " << c << " |";
    os << "\n";
  }
}

int cmd_bound(const InstanceArgs& a, const std::string& bounds, const std::string& format, double timeout) {
  const Instance inst = make_instance(a, true);
  const auto names = split_list(bounds);
  for (const auto& nm : names) {
    require(std::find(kBoundNames.begin(), kBoundNames.end(), nm) != kBoundNames.end(), "unknown bound: " + nm);
  }
  ComputeOptions opt;
  opt.oracle_budget = std::chrono::duration<double>(timeout);
  const auto values = compute_bounds(inst, names, opt);
  if (format == "json") {
    nlohmann::json j;
    j["instance"] = inst.label();
    j["k"] = inst.k;
    j["d"] = inst.k + 1;
    j["bounds"] = nlohmann::json::array();
    for (const auto& v : values) {
      nlohmann::json b;
      b["name"] = v.name;
      b["display"] = v.display;
      b["raw"] = v.raw ? nlohmann::json(to_string(*v.raw)) : nlohmann::json(nullptr);
      b["note"] = v.note;
      j["bounds"].push_back(b);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::vector<std::string> header{"instance", "k", "d"};
  std::vector<std::string> row{inst.label(), std::to_string(inst.k), std::to_string(inst.k + 1)};
  for (const auto& v : values) {
    header.push_back(v.name);
    row.push_back(v.display);
  }
  print_rows(std::cout, format, header, {row});
  return 0;
}

std::string value_text(const Spectrum& s, std::size_t i) {
  if (s.exact) return to_string(s.exact_values[i]);
  std::ostringstream os;
  os.precision(12);
  os << s.values[i];
  return os.str();
}

int cmd_spectrum(const InstanceArgs& a, bool check, const std::string& format) {
  const Instance inst = make_instance(a, false);
  const MetricSpace space = inst.space();
  const Graph g = build_distance_graph(space);
  const Spectrum s = instance_spectrum(inst, space, g);
  int status = 0;
  std::string check_detail;
  if (check) {
    if (g.order() > 1024) throw Error(ErrorCode::TooLarge, "--check needs at most 1024 vertices");
    const auto cmp = compare_spectra(s, graph_spectrum(g));
    check_detail = cmp.agree ? "agrees with eigensolver" : "MISMATCH: " + cmp.detail;
    if (!cmp.agree) status = 1;
  }
  if (format == "json") {
    auto j = nlohmann::json::parse(s.to_json());
    j["instance"] = space.describe();
    if (check) j["check"] = check_detail;
    std::cout << j.dump(2) << "\n";
    return status;
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < s.distinct(); ++i) rows.push_back({value_text(s, i), std::to_string(s.mults[i])});
  if (format != "csv") std::cout << space.describe() << (s.exact ? " (exact)" : " (floating)") << "\n\n";
  print_rows(std::cout, format, {"eigenvalue", "multiplicity"}, rows);
  if (check) std::cout << (format == "csv" ? "# " : "\n") << "check: " << check_detail << "\n";
  return status;
}

int cmd_verify(int table_id, const std::string& fixtures, const std::string& format, double timeout) {
  ComputeOptions opt;
  opt.oracle_budget = std::chrono::duration<double>(timeout);
  const auto report = verify_table(table_id, fixtures, opt, threads_from_env());
  if (format == "json") {
    nlohmann::json j;
    j["table"] = table_id;
    j["ok"] = report.ok;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
      nlohmann::json jr;
      jr["instance"] = r.label;
      jr["ok"] = r.ok;
      jr["seconds"] = r.seconds;
      for (const auto& c : r.cells) {
        jr["cells"].push_back({{"column", c.column},
                               {"expected", c.expected},
                               {"computed", c.computed},
                               {"reference_only", c.reference_only},
                               {"match", c.match}});
      }
      j["rows"].push_back(jr);
    }
    std::cout << j.dump(2) << "\n";
    return report.ok ? 0 : 1;
  }
  std::vector<std::string> header{"instance"};
  if (!report.rows.empty()) {
    for (const auto& c : report.rows.front().cells) header.push_back(c.column);
  }
  header.push_back("status");
  std::vector<std::vector<std::string>> rows;
  std::size_t passed = 0;
  for (const auto& r : report.rows) {
    std::vector<std::string> row{r.label};
    for (const auto& c : r.cells) {
      if (c.reference_only) {
        row.push_back(c.expected + " (ref)");
      } else if (c.match) {
        row.push_back(c.computed);
      } else {
        row.push_back(c.computed + " != " + c.expected);
      }
    }
    row.push_back(r.ok ? "pass" : "FAIL");
    passed += r.ok;
    rows.push_back(std::move(row));
  }
  print_rows(std::cout, format, header, rows);
  if (format != "csv") {
    std::cout << "\ntable " << table_id << ": " << passed << "/" << report.rows.size() << " rows pass\n";
  }
  return report.ok ? 0 : 1;
}

int cmd_export(const InstanceArgs& a, const std::string& out) {
  const Instance inst = make_instance(a, false);
  const Graph g = build_distance_graph(inst.space());
  if (out == "-") {
    std::cout << g.to_edge_list();
    return 0;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::InvalidParameter, "cannot write " + out);
  f << g.to_edge_list();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds on code sizes in discrete metric spaces"};
  app.require_subcommand(1);
  std::string format = "markdown";
  app.add_option("--format", format, "markdown | csv | json")
      ->check(CLI::IsMember({"markdown", "csv", "json"}))
      ->capture_default_str();
  double timeout = 60.0;
  app.add_option("--timeout", timeout, "time budget in seconds for the exact independence-number search")
      ->capture_default_str();

  InstanceArgs bound_args;
  std::string bounds = "inertia,ratio,alpha";
  auto* bound = app.add_subcommand("bound", "compute bounds for one instance");
  add_instance_options(bound, bound_args, true);
  bound->add_option("--bounds", bounds, "comma list of inertia,ratio,alpha,plotkin,hamming,singleton,varshamov")
      ->capture_default_str();

  InstanceArgs spec_args;
  bool check = false;
  auto* spectrum = app.add_subcommand("spectrum", "print the adjacency spectrum");
  add_instance_options(spectrum, spec_args, false);
  spectrum->add_flag("--check", check, "cross-check against the numeric eigensolver");

  int table_id = 0;
  std::string fixtures = SCB_FIXTURE_DIR;
  auto* verify = app.add_subcommand("verify", "recompute a table and compare with its fixture");
  verify->add_option("table", table_id, "table id (2-6)")->required()->check(CLI::Range(2, 6));
  verify->add_option("--fixtures", fixtures, "fixture directory")->capture_default_str();

  InstanceArgs export_args;
  std::string out = "-";
  auto* exp = app.add_subcommand("export-graph", "write the distance-one graph as an edge list");
  add_instance_options(exp, export_args, false);
  exp->add_option("--out", out, "output path, - for stdout")->capture_default_str();

  // Options given after a subcommand name still reach the global settings.
  for (auto* sub : {bound, spectrum, verify, exp}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends report success; everything else is a usage error
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    if (*bound) return cmd_bound(bound_args, bounds, format, timeout);
    if (*spectrum) return cmd_spectrum(spec_args, check, format);
    if (*verify) return cmd_verify(table_id, fixtures, format, timeout);
    if (*exp) return cmd_export(export_args, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InvalidParameter ? 2 : 3;
  }
  return 0;
}
