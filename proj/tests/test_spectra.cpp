#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "scb/error.hpp"
#include "scb/spectra.hpp"

using namespace scb;

namespace {

std::vector<double> random_symmetric(std::size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = u(rng);
  return a;
}

std::vector<FieldVector> connecting_set(const MetricSpace& s) {
  std::vector<FieldVector> out;
  for (auto i : s.unit_ball()) out.push_back(s.vector(i));
  return out;
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("Jacobi agrees with the library eigensolver") {
  std::mt19937 rng(8);
  for (std::size_t n : {5u, 40u, 129u, 150u}) {
    auto a = random_symmetric(n, rng);
    auto lib = eigs_symmetric(a, n);
    auto jac = eigs_jacobi(a, n);
    REQUIRE(lib.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(lib[i] == doctest::Approx(jac[i]).epsilon(1e-9));
    // trace and Frobenius norm
    double tr = 0, fro = 0;
    for (std::size_t i = 0; i < n; ++i) tr += a[i * n + i];
    for (double x : a) fro += x * x;
    CHECK(std::accumulate(jac.begin(), jac.end(), 0.0) == doctest::Approx(tr).epsilon(1e-9));
    double sq = 0;
    for (double x : jac) sq += x * x;
    CHECK(sq == doctest::Approx(fro).epsilon(1e-9));
  }
}

TEST_CASE("eigensolver input checks") {
  std::vector<double> a{0, 1, 2, 0};
  CHECK_THROWS_AS(eigs_symmetric(a, 2), Error);
}

TEST_CASE("grouping") {
  auto s = group_multiplicities({3.0, 1.0 + 1e-12, 1.0, -2.0}, 1e-8);
  REQUIRE(s.distinct() == 3);
  CHECK(s.mults == std::vector<std::int64_t>{1, 2, 1});
  CHECK(s.order() == 4);
}

TEST_CASE("city block closed form") {
  auto s = city_block_spectrum(3, 1);
  REQUIRE(s.distinct() == 3);
  CHECK(s.values[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(s.values[1] == 0.0);
  CHECK(s.values[2] == doctest::Approx(-std::sqrt(2.0)));
  for (auto [m, n] : {std::pair{3, 2}, {4, 2}, {4, 3}, {5, 2}, {6, 2}}) {
    auto g = build_distance_graph(MetricSpace::city_block(m, n));
    CHECK(compare_spectra(city_block_spectrum(m, n), graph_spectrum(g)).agree);
  }
}

TEST_CASE("phase-rotation closed form and characters") {
  auto s = phase_rotation_spectrum(3, 2);
  REQUIRE(s.exact);
  CHECK(s.exact_values == std::vector<Rational>{6, 0, -3});
  CHECK(s.mults == std::vector<std::int64_t>{1, 6, 2});
  for (auto [q, n] : {std::pair{2u, 4}, {3u, 3}, {4u, 3}, {5u, 2}, {2u, 1}, {7u, 1}}) {
    auto sp = MetricSpace::phase_rotation(q, n);
    auto ch = cayley_spectrum_abelian(sp.field(), n, connecting_set(sp));
    CHECK(compare_spectra(phase_rotation_spectrum(q, n), ch).agree);
    CHECK(compare_spectra(ch, graph_spectrum(build_distance_graph(sp))).agree);
  }
}

TEST_CASE("degenerate spectrum that stalls a plain tridiagonal QR") {
  // 625 vertices, three distinct eigenvalues
  const auto g = build_distance_graph(MetricSpace::phase_rotation(25, 2));
  CHECK(compare_spectra(phase_rotation_spectrum(25, 2), graph_spectrum(g)).agree);
}

TEST_CASE("character sums for block and burst metrics") {
  for (const auto& sp : {MetricSpace::block(2, {{1, 2}, {3}}), MetricSpace::block(3, {{1, 2}, {3, 4}}),
                         MetricSpace::cyclic_burst(2, 5, 2), MetricSpace::cyclic_burst(3, 3, 2)}) {
    auto ch = cayley_spectrum_abelian(sp.field(), sp.length(), connecting_set(sp));
    CHECK(ch.exact);
    CHECK(compare_spectra(ch, graph_spectrum(build_distance_graph(sp))).agree);
  }
  // K4 box K2
  auto k4k2 = MetricSpace::block(2, {{1, 2}, {3}});
  auto blk = cayley_spectrum_abelian(k4k2.field(), 3, connecting_set(k4k2));
  CHECK(blk.exact_values == std::vector<Rational>{4, 2, 0, -2});
  CHECK(blk.mults == std::vector<std::int64_t>{1, 1, 3, 3});
}

TEST_CASE("connecting set must be symmetric and avoid zero") {
  auto f = field_of_order(3);
  try {
    cayley_spectrum_abelian(f, 1, {FieldVector{f, {1}}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AsymmetricConnectingSet);
  }
  CHECK_THROWS_AS(cayley_spectrum_abelian(f, 1, {FieldVector{f, {0}}}), Error);
}

TEST_CASE("power sums are traces of powers") {
  auto sp = MetricSpace::phase_rotation(3, 3);
  auto g = build_distance_graph(sp);
  auto walks = closed_walk_counts(g, 5);
  auto s = phase_rotation_spectrum(3, 3);
  for (int t = 0; t <= 5; ++t) {
    std::int64_t tr = 0;
    for (const auto& w : walks) tr += w[t];
    CHECK(s.power_sum(t) == Rational(static_cast<long>(tr)));
  }
  auto cb = city_block_spectrum(4, 2);
  auto gw = closed_walk_counts(build_distance_graph(MetricSpace::city_block(4, 2)), 4);
  std::int64_t tr4 = 0;
  for (const auto& w : gw) tr4 += w[4];
  CHECK(cb.power_sum(4) == Rational(static_cast<long>(tr4)));
}

TEST_CASE("comparison reports disagreement") {
  auto a = phase_rotation_spectrum(3, 2);
  auto b = a;
  b.mults[1] -= 1;
  b.mults[2] += 1;
  auto c = compare_spectra(a, b);
  CHECK_FALSE(c.agree);
  CHECK_FALSE(c.detail.empty());
}

TEST_CASE("JSON form") {
  CHECK(phase_rotation_spectrum(3, 2).to_json() == R"({"distinct":[6,0,-3],"exact":true,"mults":[1,6,2]})");
}

}
