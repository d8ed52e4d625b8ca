#pragma once

// Instance descriptions, per-instance bound computation and the fixture
// comparison behind the `bound` and `verify` commands.

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scb/graphs.hpp"
#include "scb/metrics.hpp"
#include "scb/spectra.hpp"
#include "scb/spectral_bounds.hpp"

namespace scb {

struct Instance {
  MetricKind kind = MetricKind::CityBlock;
  int m = 0;  // city block alphabet
  int n = 0;
  std::uint32_t q = 0;
  int b = 0;
  std::vector<std::vector<int>> partition;
  std::string family = "hamming";  // projective: "hamming" or "phase-rotation"
  int k = 1;

  MetricSpace space() const;
  std::string label() const;
};

// The projective family named by Instance::family.
ProjectiveParams projective_family(std::uint32_t q, int n, const std::string& family);

// "{{1,2},{3}}" -> {{1,2},{3}}
std::vector<std::vector<int>> parse_partition(const std::string& text);
std::string format_partition(const std::vector<std::vector<int>>& partition);

// Bound names understood by compute_bounds.
inline const std::vector<std::string> kBoundNames = {"inertia", "ratio", "alpha", "plotkin",
                                                     "hamming", "singleton", "varshamov"};

struct BoundValue {
  std::string name;
  std::string display;  // table convention: floors, exact fractions, "-" if not applicable
  std::optional<Rational> raw;
  std::string note;
};

struct ComputeOptions {
  std::chrono::duration<double> oracle_budget = std::chrono::seconds(60);
};

// Everything derived from an instance that several bounds share.
struct InstanceData {
  Instance inst;
  MetricSpace space;
  Graph graph;
  Spectrum spectrum;
};

InstanceData prepare(const Instance& inst);
// The adjacency spectrum by the closed-form or character route when one exists.
Spectrum instance_spectrum(const Instance& inst, const MetricSpace& space, const Graph& g);

BoundValue compute_bound(const InstanceData& data, const std::string& name, const ComputeOptions& opt = {});
std::vector<BoundValue> compute_bounds(const Instance& inst, const std::vector<std::string>& names,
                                       const ComputeOptions& opt = {});

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::filesystem::path& path);
std::filesystem::path fixture_path(const std::filesystem::path& dir, int table_id);

struct CellCheck {
  std::string column;
  std::string expected;
  std::string computed;
  bool reference_only = false;
  bool match = false;
};

struct RowCheck {
  std::string label;
  std::vector<CellCheck> cells;
  bool ok = false;
  double seconds = 0.0;
};

struct TableCheck {
  int table_id = 0;
  std::vector<RowCheck> rows;
  bool ok = false;
};

// Recomputes every computable column of a fixture table. Rows run on up to
// `threads` workers; results keep fixture order. Throws FixtureNotFound.
TableCheck verify_table(int table_id, const std::filesystem::path& fixture_dir, const ComputeOptions& opt = {},
                        unsigned threads = 1);

// SCB_THREADS if set and positive, otherwise 1.
unsigned threads_from_env();

}  // namespace scb
