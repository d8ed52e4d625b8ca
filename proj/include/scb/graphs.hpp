#pragma once

// Dense undirected graphs (bitset rows), distance graphs of metric spaces,
// power graphs, regularity diagnostics and an exact maximum independent set
// solver.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scb/metrics.hpp"

namespace scb {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const noexcept;
  bool none() const noexcept;
  // First set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const noexcept;

  Bitset& operator&=(const Bitset& o) noexcept;
  Bitset& operator|=(const Bitset& o) noexcept;
  // this &= ~o
  Bitset& subtract(const Bitset& o) noexcept;
  bool intersects(const Bitset& o) const noexcept;
  std::size_t count_and(const Bitset& o) const noexcept;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::vector<std::uint64_t>& words() noexcept { return words_; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Throws InvalidParameter on self-loops or out-of-range endpoints.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept;
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return rows_[u].test(v); }
  const Bitset& row(std::size_t u) const noexcept { return rows_[u]; }
  std::vector<std::size_t> neighbors(std::size_t u) const;
  std::size_t degree(std::size_t u) const noexcept { return rows_[u].count(); }
  std::vector<std::size_t> degree_list() const;
  bool is_regular() const;

  // Optional ambient labels, one per vertex.
  const std::vector<std::vector<std::uint32_t>>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::vector<std::uint32_t>> labels);

  Graph complement() const;
  // Subgraph induced by the given vertices, relabelled 0..k-1 in the given order.
  Graph induced(const std::vector<std::size_t>& vertices) const;

  // "n m" header, then one "u v" line per edge with u < v.
  std::string to_edge_list() const;

 private:
  std::vector<Bitset> rows_;
  std::vector<std::vector<std::uint32_t>> labels_;
};

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

// Vertices in canonical order; edges at metric distance exactly one.
Graph build_distance_graph(const MetricSpace& space);

inline constexpr std::uint16_t kUnreachable = 0xFFFF;

struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<std::uint16_t> d;
  std::uint16_t at(std::size_t u, std::size_t v) const { return d[u * n + v]; }
  int max_finite() const;
};

std::vector<std::uint16_t> bfs_distances(const Graph& g, std::size_t source);
DistanceMatrix all_pairs_graph_distance(const Graph& g);
bool is_connected(const Graph& g);
bool verify_geodesic_equals_metric(const MetricSpace& space, const Graph& g);

Graph power_graph(const Graph& g, int k);

// walks[v][i] = (A^i)_vv for i = 0..k. Throws TooLarge on 64-bit overflow.
std::vector<std::vector<std::int64_t>> closed_walk_counts(const Graph& g, int k);
bool is_k_partially_walk_regular(const Graph& g, int k);
int triangle_delta(const Graph& g);

struct IntersectionWitness {
  std::size_t x1, y1, x2, y2;  // two pairs at distance `distance`
  int distance;
};

struct DistanceRegularityReport {
  bool is_distance_regular = false;
  int diameter = 0;
  std::vector<std::int64_t> b;  // b_0 .. b_{D-1}
  std::vector<std::int64_t> c;  // c_1 .. c_D
  std::optional<IntersectionWitness> witness;
};

// Throws Disconnected for disconnected graphs.
DistanceRegularityReport is_distance_regular(const Graph& g);

struct MisOptions {
  std::chrono::duration<double> time_budget = std::chrono::seconds(60);
  // The graph's automorphism group acts transitively on vertices (true for
  // graphs built from translation-invariant metrics), so some maximum
  // independent set contains vertex 0.
  bool vertex_transitive = false;
  // A known independent set used as the initial incumbent.
  std::vector<std::size_t> hint;
  // Optional partition into cliques, as a class id per vertex. The number of
  // classes meeting a candidate set bounds its independence number.
  std::vector<std::size_t> clique_class;
};

struct MisResult {
  std::size_t alpha = 0;
  std::vector<std::size_t> certificate;
  bool exact = true;
  std::uint64_t nodes = 0;
};

MisResult max_independent_set(const Graph& g, const MisOptions& options = {});
MisResult k_independence_number(const Graph& g, int k, const MisOptions& options = {});

// Greedy search for an additive subgroup of a translation-invariant space
// that is independent in G^k; a lower bound that seeds the exact search.
std::vector<std::size_t> additive_code_hint(const MetricSpace& space, const Graph& g, int k,
                                            int attempts = 32);

// Class ids of the cosets of an additive subgroup H with H \ {0} inside the
// k-ball around zero; every coset is a clique of G^k. Empty if the space is
// not translation invariant.
std::vector<std::size_t> coset_clique_classes(const MetricSpace& space, const Graph& g, int k);

bool is_independent_set(const Graph& g, const std::vector<std::size_t>& vertices);

}  // namespace scb
