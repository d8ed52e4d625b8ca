#include <cmath>
#include <random>

#include "doctest.h"
#include "scb/classical_bounds.hpp"
#include "scb/error.hpp"

using namespace scb;

TEST_SUITE("classical_bounds") {

TEST_CASE("Plotkin-type") {
  CHECK(*plotkin_city_block(3, 1, 2) == 2);
  CHECK(*plotkin_city_block(4, 1, 2) == 4);
  CHECK_FALSE(plotkin_city_block(5, 1, 2).has_value());
  CHECK(*plotkin_city_block(6, 1, 4) == make_rational(8, 3));
}

TEST_CASE("ball sizes") {
  std::vector<int> zero{0}, mid{1};
  CHECK(ball_size_city_block(3, zero, 0) == 1);
  CHECK(ball_size_city_block(3, zero, 1) == 2);
  CHECK(ball_size_city_block(3, mid, 1) == 3);
  std::mt19937 rng(2);
  for (auto [m, n] : {std::pair{3, 3}, {4, 2}, {5, 3}}) {
    auto s = MetricSpace::city_block(m, n);
    std::uniform_int_distribution<std::size_t> pick(0, s.ambient_size() - 1);
    for (int t = 0; t < 20; ++t) {
      const std::size_t c = pick(rng);
      const int radius = t % (n * (m - 1) + 1);
      std::int64_t brute = 0;
      for (std::size_t y = 0; y < s.ambient_size(); ++y) brute += s.distance(c, y) <= radius;
      auto e = s.element(c);
      std::vector<int> x(e.begin(), e.end());
      REQUIRE(ball_size_city_block(m, x, radius) == brute);
    }
  }
}

TEST_CASE("Hamming-type") {
  CHECK(hamming_city_block(5, 1, 3) == make_rational(5, 2));
  CHECK(hamming_city_block(4, 3, 6) == make_rational(32, 5));
  CHECK(hamming_city_block(5, 2, 5) == make_rational(25, 6));
  for (auto [m, n] : {std::pair{3, 2}, {4, 3}, {6, 2}}) CHECK(hamming_city_block(m, n, 2) == Rational(static_cast<long>(std::pow(m, n))));
  CHECK_THROWS_AS(hamming_city_block(3, 11, 3), Error);
}

TEST_CASE("Singleton-type, phase-rotation") {
  CHECK(singleton_phase_rotation(3, 2, 2) == 3);
  CHECK(singleton_phase_rotation(2, 4, 2) == 8);
  CHECK(singleton_phase_rotation(2, 2, 2) == 1);
  CHECK(singleton_phase_rotation(3, 5, 3) == 27);
}

TEST_CASE("Singleton-type, projective route") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (int n : {2, 3, 4}) {
      auto f = field_of_order(q);
      auto pr = phase_rotation_family(f, n);
      std::vector<FieldVector> units;
      for (int i = 1; i <= n; ++i) units.push_back(FieldVector::unit(f, n, i));
      auto ham = make_projective_params(f, n, units);
      for (int d = 1; d <= n + 1; ++d) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(d);
        CHECK(singleton_projective(pr, d) == singleton_phase_rotation(q, n, d));
        std::int64_t expect = 1;
        for (int i = 0; i < n - d + 1; ++i) expect *= q;
        CHECK(singleton_projective(ham, d) == expect);
      }
    }
  }
  auto f = field_of_order(2);
  CHECK(mu_projective(phase_rotation_family(f, 3), 0) == 0);
}

TEST_CASE("Singleton-type, block and burst") {
  auto f2 = field_of_order(2);
  CHECK(singleton_block(make_block_params(f2, {{1, 2}, {3, 4}}), 2) == 4);
  CHECK(singleton_block(make_block_params(f2, {{1, 2}, {3, 4}, {5, 6}}), 3) == 4);
  CHECK(singleton_block(make_block_params(f2, {{1, 2}, {3}}), 1) == 8);
  CHECK(singleton_block(make_block_params(f2, {{1, 2}, {3}}), 3) == 1);
  CHECK(singleton_cyclic_burst(3, 2, 2, 2) == 2);
  CHECK(singleton_cyclic_burst(5, 2, 2, 3) == 2);
  CHECK(singleton_cyclic_burst(5, 3, 2, 1) == 243);
  try {
    singleton_cyclic_burst(5, 2, 4, 3);
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotApplicable);
  }
}

TEST_CASE("Varshamov bound") {
  CHECK(varshamov_bound(4, 4) == 4);
  CHECK(floor_to_int(varshamov_bound(7, 6)) == 10);
  CHECK(varshamov_bound(2, 2) == 2);
  CHECK(varshamov_bound(7, 6) == make_rational(32, 3));
}

}
