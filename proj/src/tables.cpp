#include "scb/tables.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "scb/classical_bounds.hpp"
#include "scb/error.hpp"

namespace scb {

MetricSpace Instance::space() const {
  switch (kind) {
    case MetricKind::CityBlock: return MetricSpace::city_block(m, n);
    case MetricKind::PhaseRotation: return MetricSpace::phase_rotation(q, n);
    case MetricKind::Block: return MetricSpace::block(q, partition);
    case MetricKind::CyclicBurst: return MetricSpace::cyclic_burst(q, n, b);
    case MetricKind::Varshamov: return MetricSpace::varshamov(n);
    case MetricKind::Projective: return MetricSpace::projective(projective_family(q, n, family));
  }
  throw Error(ErrorCode::InvalidParameter, "unknown metric");
}

ProjectiveParams projective_family(std::uint32_t q, int n, const std::string& family) {
  auto field = field_of_order(q);
  if (family == "phase-rotation") return phase_rotation_family(field, n);
  if (family != "hamming") throw Error(ErrorCode::InvalidParameter, "unknown projective family: " + family);
  std::vector<FieldVector> units;
  for (int i = 1; i <= n; ++i) units.push_back(FieldVector::unit(field, n, i));
  return make_projective_params(field, n, std::move(units));
}

std::string Instance::label() const {
  std::string s(to_string(kind));
  switch (kind) {
    case MetricKind::CityBlock: s += " m=" + std::to_string(m) + " n=" + std::to_string(n); break;
    case MetricKind::PhaseRotation: s += " q=" + std::to_string(q) + " n=" + std::to_string(n); break;
    case MetricKind::Block: s += " P=" + format_partition(partition) + " q=" + std::to_string(q); break;
    case MetricKind::CyclicBurst:
      s += " n=" + std::to_string(n) + " q=" + std::to_string(q) + " b=" + std::to_string(b);
      break;
    case MetricKind::Varshamov: s += " n=" + std::to_string(n); break;
    case MetricKind::Projective:
      s += " family=" + family + " q=" + std::to_string(q) + " n=" + std::to_string(n);
      break;
  }
  return s + " k=" + std::to_string(k);
}

std::vector<std::vector<int>> parse_partition(const std::string& text) {
  std::vector<std::vector<int>> out;
  int depth = 0;
  std::string num;
  auto flush = [&]() {
    if (num.empty()) return;
    if (depth != 2) throw Error(ErrorCode::InvalidParameter, "malformed partition: " + text);
    out.back().push_back(std::stoi(num));
    num.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num += c;
    } else if (c == '{') {
      if (++depth == 2) out.emplace_back();
      if (depth > 2) throw Error(ErrorCode::InvalidParameter, "malformed partition: " + text);
    } else if (c == '}') {
      flush();
      if (--depth < 0) throw Error(ErrorCode::InvalidParameter, "malformed partition: " + text);
    } else if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::InvalidParameter, "malformed partition: " + text);
    }
  }
  if (depth != 0 || out.empty()) throw Error(ErrorCode::InvalidParameter, "malformed partition: " + text);
  return out;
}

std::string format_partition(const std::vector<std::vector<int>>& partition) {
  std::string s = "{";
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i) s += ",";
    s += "{";
    for (std::size_t j = 0; j < partition[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(partition[i][j]);
    }
    s += "}";
  }
  return s + "}";
}

Spectrum instance_spectrum(const Instance& inst, const MetricSpace& space, const Graph& g) {
  switch (inst.kind) {
    case MetricKind::CityBlock: return city_block_spectrum(inst.m, inst.n);
    case MetricKind::PhaseRotation: return phase_rotation_spectrum(inst.q, inst.n);
    case MetricKind::Varshamov: return graph_spectrum(g);
    default: break;
  }
  std::vector<FieldVector> s;
  for (auto i : space.unit_ball()) s.push_back(space.vector(i));
  return cayley_spectrum_abelian(space.field(), space.length(), s);
}

InstanceData prepare(const Instance& inst) {
  MetricSpace space = inst.space();
  Graph g = build_distance_graph(space);
  Spectrum s = instance_spectrum(inst, space, g);
  return InstanceData{inst, std::move(space), std::move(g), std::move(s)};
}

namespace {

std::string floored(const Rational& r) { return std::to_string(floor_to_int(r)); }

BoundValue inertia_value(const InstanceData& d) {
  const int k = d.inst.k;
  if (is_k_partially_walk_regular(d.graph, k)) {
    auto rep = inertia_milp_walkreg(d.spectrum, k);
    return {"inertia", floored(rep.raw_value), rep.raw_value, "walk-regular MILP"};
  }
  auto rep = inertia_milp(d.graph, d.spectrum, k);
  return {"inertia", floored(rep.raw_value), rep.raw_value, "vertex MILP"};
}

BoundValue ratio_value(const InstanceData& d) {
  if (!d.graph.is_regular()) return {"ratio", "-", std::nullopt, "graph is not regular"};
  if (!is_k_partially_walk_regular(d.graph, d.inst.k)) {
    return {"ratio", "-", std::nullopt, "graph is not k-partially walk-regular"};
  }
  auto rep = minor_polynomial_lp(d.spectrum, d.inst.k);
  return {"ratio", floored(rep.raw_value), rep.raw_value, rep.notes.empty() ? "" : rep.notes.front()};
}

BoundValue alpha_value(const InstanceData& d, const ComputeOptions& opt) {
  MisOptions mo;
  mo.time_budget = opt.oracle_budget;
  if (d.space.translation_invariant()) {
    mo.vertex_transitive = true;
    mo.hint = additive_code_hint(d.space, d.graph, d.inst.k);
    mo.clique_class = coset_clique_classes(d.space, d.graph, d.inst.k);
  }
  const auto res = k_independence_number(d.graph, d.inst.k, mo);
  const Rational a(static_cast<long>(res.alpha));
  if (!res.exact) return {"alpha", ">=" + std::to_string(res.alpha) + " (timeout)", std::nullopt, "lower bound only"};
  return {"alpha", std::to_string(res.alpha), a, ""};
}

BoundValue singleton_value(const InstanceData& d) {
  const int dist = d.inst.k + 1;
  std::int64_t v = 0;
  switch (d.inst.kind) {
    case MetricKind::PhaseRotation: v = singleton_phase_rotation(d.inst.q, d.inst.n, dist); break;
    case MetricKind::Block: v = singleton_block(std::get<BlockParams>(d.space.params()), dist); break;
    case MetricKind::CyclicBurst: v = singleton_cyclic_burst(d.inst.n, d.inst.q, d.inst.b, dist); break;
    case MetricKind::Projective: v = singleton_projective(std::get<ProjectiveParams>(d.space.params()), dist); break;
    default: return {"singleton", "-", std::nullopt, "no Singleton-type bound for this metric"};
  }
  const Rational r(static_cast<long>(v));
  return {"singleton", std::to_string(v), r, ""};
}

}  // namespace

BoundValue compute_bound(const InstanceData& d, const std::string& name, const ComputeOptions& opt) {
  const int dist = d.inst.k + 1;
  try {
    if (name == "inertia") return inertia_value(d);
    if (name == "ratio") return ratio_value(d);
    if (name == "alpha") return alpha_value(d, opt);
    if (name == "singleton") return singleton_value(d);
    if (name == "plotkin") {
      if (d.inst.kind != MetricKind::CityBlock) return {name, "-", std::nullopt, "city block only"};
      auto v = plotkin_city_block(d.inst.m, d.inst.n, dist);
      if (!v) return {name, "-", std::nullopt, "d <= n(m-1)/2"};
      return {name, floored(*v), *v, ""};
    }
    if (name == "hamming") {
      if (d.inst.kind != MetricKind::CityBlock) return {name, "-", std::nullopt, "city block only"};
      auto v = hamming_city_block(d.inst.m, d.inst.n, dist);
      return {name, to_string(v), v, ""};
    }
    if (name == "varshamov") {
      if (d.inst.kind != MetricKind::Varshamov) return {name, "-", std::nullopt, "Varshamov metric only"};
      auto v = varshamov_bound(d.inst.n, dist);
      return {name, floored(v), v, ""};
    }
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::NotApplicable:
      case ErrorCode::AssumptionViolated:
      case ErrorCode::TooFewEigenvalues:
        return {name, "-", std::nullopt, e.what()};
      default:
        throw;
    }
  }
  throw Error(ErrorCode::InvalidParameter, "unknown bound: " + name);
}

std::vector<BoundValue> compute_bounds(const Instance& inst, const std::vector<std::string>& names,
                                       const ComputeOptions& opt) {
  const InstanceData d = prepare(inst);
  std::vector<BoundValue> out;
  for (const auto& name : names) out.push_back(compute_bound(d, name, opt));
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct TableLayout {
  std::vector<std::string> key_columns;
  std::vector<std::string> computed;   // compared exactly
  std::vector<std::string> reference;  // carried along, never recomputed
};

TableLayout layout_for(int id) {
  switch (id) {
    case 2: return {{"m", "n", "k"}, {"inertia", "alpha", "plotkin", "hamming"}, {"theta"}};
    case 3: return {{"partition", "q", "k"}, {"inertia", "ratio", "alpha", "singleton"}, {"theta"}};
    case 4: return {{"n", "q", "b", "k"}, {"inertia", "ratio", "alpha", "singleton"}, {"theta"}};
    case 5: return {{"q", "n", "k"}, {"inertia", "ratio", "alpha", "singleton"}, {"theta"}};
    case 6: return {{"n", "k"}, {"inertia", "alpha", "varshamov"}, {"theta", "plotkin_borden"}};
    default: break;
  }
  throw Error(ErrorCode::InvalidParameter, "no table " + std::to_string(id));
}

Instance instance_from_row(int id, const CsvTable& t, const std::vector<std::string>& row) {
  auto col = [&](const std::string& name) -> const std::string& {
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      if (t.header[i] == name) return row.at(i);
    }
    throw Error(ErrorCode::FixtureNotFound, "fixture column missing: " + name);
  };
  auto num = [&](const std::string& name) { return std::stoi(col(name)); };
  Instance inst;
  inst.k = num("k");
  switch (id) {
    case 2:
      inst.kind = MetricKind::CityBlock;
      inst.m = num("m");
      inst.n = num("n");
      break;
    case 3:
      inst.kind = MetricKind::Block;
      inst.partition = parse_partition(col("partition"));
      inst.q = static_cast<std::uint32_t>(num("q"));
      break;
    case 4:
      inst.kind = MetricKind::CyclicBurst;
      inst.n = num("n");
      inst.q = static_cast<std::uint32_t>(num("q"));
      inst.b = num("b");
      break;
    case 5:
      inst.kind = MetricKind::PhaseRotation;
      inst.q = static_cast<std::uint32_t>(num("q"));
      inst.n = num("n");
      break;
    case 6:
      inst.kind = MetricKind::Varshamov;
      inst.n = num("n");
      break;
    default: break;
  }
  return inst;
}

RowCheck check_row(int id, const TableLayout& layout, const CsvTable& t, const std::vector<std::string>& row,
                   const ComputeOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  RowCheck rc;
  auto expected = [&](const std::string& name) {
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      if (t.header[i] == name) return row.at(i);
    }
    throw Error(ErrorCode::FixtureNotFound, "fixture column missing: " + name);
  };
  try {
    const Instance inst = instance_from_row(id, t, row);
    rc.label = inst.label();
    const InstanceData d = prepare(inst);
    for (const auto& name : layout.computed) {
      CellCheck cell{name, expected(name), "", false, false};
      try {
        cell.computed = compute_bound(d, name, opt).display;
      } catch (const std::exception& e) {
        cell.computed = std::string("error: ") + e.what();
      }
      cell.match = cell.computed == cell.expected;
      rc.cells.push_back(std::move(cell));
    }
  } catch (const std::exception& e) {
    if (rc.label.empty()) rc.label = "row";
    rc.cells.push_back({"instance", "", std::string("error: ") + e.what(), false, false});
  }
  for (const auto& name : layout.reference) rc.cells.push_back({name, expected(name), "", true, true});
  rc.ok = std::all_of(rc.cells.begin(), rc.cells.end(), [](const CellCheck& c) { return c.match; });
  rc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rc;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FixtureNotFound, "cannot open " + path.string());
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (first) {
      t.header = std::move(fields);
      first = false;
    } else {
      if (fields.size() != t.header.size()) {
        throw Error(ErrorCode::DimensionMismatch, "ragged row in " + path.string());
      }
      t.rows.push_back(std::move(fields));
    }
  }
  if (first) throw Error(ErrorCode::FixtureNotFound, "empty fixture " + path.string());
  return t;
}

std::filesystem::path fixture_path(const std::filesystem::path& dir, int table_id) {
  return dir / ("table" + std::to_string(table_id) + ".csv");
}

TableCheck verify_table(int table_id, const std::filesystem::path& fixture_dir, const ComputeOptions& opt,
                        unsigned threads) {
  const TableLayout layout = layout_for(table_id);
  const CsvTable t = read_csv(fixture_path(fixture_dir, table_id));
  TableCheck out;
  out.table_id = table_id;
  out.rows.resize(t.rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < t.rows.size(); i = next++) {
      out.rows[i] = check_row(table_id, layout, t, t.rows[i], opt);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(t.rows.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  out.ok = std::all_of(out.rows.begin(), out.rows.end(), [](const RowCheck& r) { return r.ok; });
  return out;
}

unsigned threads_from_env() {
  if (const char* v = std::getenv("SCB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

}  // namespace scb
