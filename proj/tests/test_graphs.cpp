#include <random>

#include "doctest.h"
#include "scb/error.hpp"
#include "scb/graphs.hpp"

using namespace scb;

namespace {

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::size_t brute_alpha(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : g.neighbors(u)) adj[u] |= 1u << v;
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      if ((s >> u & 1u) && (adj[u] & s)) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
  }
  return best;
}

// (A^i)_vv from dense integer matrix powers.
std::vector<std::vector<std::int64_t>> dense_walks(const Graph& g, int k) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> a(n * n, 0), p(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    p[u * n + u] = 1;
    for (std::size_t v : g.neighbors(u)) a[u * n + v] = 1;
  }
  std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(k + 1));
  for (int i = 0; i <= k; ++i) {
    for (std::size_t v = 0; v < n; ++v) out[v][i] = p[v * n + v];
    std::vector<std::int64_t> next(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (p[x * n + y])
          for (std::size_t z = 0; z < n; ++z) next[x * n + z] += p[x * n + y] * a[y * n + z];
    p = std::move(next);
  }
  return out;
}

}  // namespace

TEST_SUITE("graphs") {

TEST_CASE("basic constructors") {
  auto k4 = complete_graph(4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.is_regular());
  auto p3 = path_graph(3);
  CHECK(p3.degree_list() == std::vector<std::size_t>{1, 2, 1});
  CHECK_FALSE(p3.is_regular());
  CHECK(cycle_graph(5).complement().edge_count() == 5);
  CHECK(p3.to_edge_list() == "3 2\n0 1\n1 2\n");
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 3), Error);
}

TEST_CASE("distance graphs are geodesic for every metric") {
  std::vector<MetricSpace> spaces{MetricSpace::city_block(3, 2),   MetricSpace::city_block(4, 3),
                                  MetricSpace::phase_rotation(3, 3), MetricSpace::phase_rotation(2, 5),
                                  MetricSpace::block(2, {{1, 2}, {3}}), MetricSpace::cyclic_burst(2, 5, 2),
                                  MetricSpace::varshamov(5),        MetricSpace::projective(phase_rotation_family(field_of_order(4), 2))};
  for (const auto& s : spaces) {
    CAPTURE(s.describe());
    auto g = build_distance_graph(s);
    CHECK(is_connected(g));
    CHECK(verify_geodesic_equals_metric(s, g));
  }
}

TEST_CASE("city block graph is the Cartesian product of paths") {
  auto g = build_distance_graph(MetricSpace::city_block(3, 2));
  CHECK(g.edge_count() == 12);
  CHECK(g.degree(4) == 4);
  CHECK(g.degree(0) == 2);
}

TEST_CASE("power graph matches BFS distances") {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    auto g = random_graph(15, 0.2, rng);
    auto dist = all_pairs_graph_distance(g);
    for (int k = 1; k <= 3; ++k) {
      auto gk = power_graph(g, k);
      for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = 0; v < g.order(); ++v)
          REQUIRE(gk.adjacent(u, v) == (u != v && dist.at(u, v) <= k));
    }
  }
}

TEST_CASE("closed walk counts match dense powers") {
  std::mt19937 rng(2);
  for (int t = 0; t < 10; ++t) {
    auto g = random_graph(12, 0.35, rng);
    CHECK(closed_walk_counts(g, 6) == dense_walks(g, 6));
  }
}

TEST_CASE("walk regularity") {
  CHECK(is_k_partially_walk_regular(cycle_graph(6), 5));
  CHECK(is_k_partially_walk_regular(path_graph(4), 1));
  CHECK_FALSE(is_k_partially_walk_regular(path_graph(4), 2));
  CHECK(is_k_partially_walk_regular(build_distance_graph(MetricSpace::phase_rotation(3, 3)), 6));
}

TEST_CASE("distance regularity") {
  auto c = is_distance_regular(cycle_graph(7));
  CHECK(c.is_distance_regular);
  CHECK(c.diameter == 3);
  CHECK(c.b == std::vector<std::int64_t>{2, 1, 1});
  CHECK(c.c == std::vector<std::int64_t>{1, 1, 1});
  auto p = is_distance_regular(path_graph(4));
  CHECK_FALSE(p.is_distance_regular);
  Graph two(2);
  CHECK_THROWS_AS(is_distance_regular(two), Error);
  auto pr = is_distance_regular(build_distance_graph(MetricSpace::phase_rotation(3, 2)));
  CHECK(pr.is_distance_regular);
  CHECK(pr.c.at(1) == 6);
  auto pr33 = is_distance_regular(build_distance_graph(MetricSpace::phase_rotation(3, 3)));
  CHECK_FALSE(pr33.is_distance_regular);
  CHECK(pr33.witness.has_value());
}

TEST_CASE("maximum independent set matches exhaustive search") {
  std::mt19937 rng(4);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 6 + t % 13;
    auto g = random_graph(n, 0.15 + 0.1 * (t % 6), rng);
    auto r = max_independent_set(g);
    CAPTURE(t);
    REQUIRE(r.exact);
    REQUIRE(r.alpha == brute_alpha(g));
    REQUIRE(r.certificate.size() == r.alpha);
    REQUIRE(is_independent_set(g, r.certificate));
  }
}

TEST_CASE("search aids do not change the answer") {
  for (auto [q, n, k] : {std::tuple{3u, 3, 1}, {2u, 5, 1}, {2u, 6, 2}, {4u, 3, 2}}) {
    auto s = MetricSpace::phase_rotation(q, n);
    auto g = build_distance_graph(s);
    MisOptions plain;
    MisOptions aided;
    aided.vertex_transitive = true;
    aided.hint = additive_code_hint(s, g, k);
    aided.clique_class = coset_clique_classes(s, g, k);
    CHECK(is_independent_set(power_graph(g, k), aided.hint));
    CHECK(k_independence_number(g, k, plain).alpha == k_independence_number(g, k, aided).alpha);
  }
}

TEST_CASE("k-independence examples") {
  CHECK(k_independence_number(cycle_graph(9), 2).alpha == 3);
  CHECK(k_independence_number(build_distance_graph(MetricSpace::city_block(4, 3)), 1).alpha == 32);
  CHECK(k_independence_number(build_distance_graph(MetricSpace::city_block(6, 2)), 5).alpha == 3);
}

TEST_CASE("bad hints are rejected") {
  auto g = complete_graph(4);
  MisOptions o;
  o.hint = {0, 1};
  CHECK_THROWS_AS(max_independent_set(g, o), Error);
}

}
