#include <cmath>
#include <random>

#include "doctest.h"
#include "scb/algebra.hpp"
#include "scb/error.hpp"

using namespace scb;

namespace {

void check_axioms_exhaustive(const FiniteField& f) {
  const Element q = f.order();
  for (Element a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    for (Element b = 0; b < q; ++b) {
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      for (Element c = 0; c < q; ++c) {
        REQUIRE(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
        REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

// Coefficients (lowest first) of the product of two polynomials over GF(p).
std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
  std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

std::vector<std::vector<std::uint32_t>> monic_of_degree(std::uint32_t p, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint32_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint32_t> c(d + 1, 0);
    std::uint32_t r = idx;
    for (std::uint32_t i = 0; i < d; ++i) {
      c[i] = r % p;
      r /= p;
    }
    c[d] = 1;
    out.push_back(c);
  }
  return out;
}

bool reducible_by_products(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    for (const auto& a : monic_of_degree(p, d)) {
      for (const auto& b : monic_of_degree(p, k - d)) {
        if (poly_mul(a, b, p) == f) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("prime fields behave like integers mod p") {
  auto f = make_field(2, 1);
  CHECK(f->add(1, 1) == 0);
  auto g = make_field(3, 1);
  CHECK(g->mul(2, 2) == 1);
  CHECK(g->inv(2) == 2);
}

TEST_CASE("GF(4) under x^2+x+1") {
  auto f = make_field(2, 2);
  CHECK(f->reduction_polynomial() == std::vector<std::uint32_t>{1, 1, 1});
  // a = x is index 2, a + 1 is index 3
  CHECK(f->mul(2, 2) == 3);
  CHECK(f->mul(3, 3) == 2);
  CHECK(f->mul(2, 3) == 1);
}

TEST_CASE("field axioms hold exhaustively for small orders") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    CAPTURE(q);
    check_axioms_exhaustive(*field_of_order(q));
  }
}

TEST_CASE("field axioms on random triples for larger orders") {
  std::mt19937 rng(7);
  for (std::uint32_t q : {25u, 27u, 32u, 49u, 81u, 125u, 256u}) {
    auto f = field_of_order(q);
    std::uniform_int_distribution<Element> pick(0, q - 1);
    for (int t = 0; t < 10000; ++t) {
      const Element a = pick(rng), b = pick(rng), c = pick(rng);
      REQUIRE(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
      REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      if (a != 0) REQUIRE(f->mul(a, f->inv(a)) == 1);
    }
  }
}

TEST_CASE("reduction polynomial is the first irreducible in index order") {
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}}) {
    CAPTURE(p);
    CAPTURE(k);
    const auto chosen = make_field(p, k)->reduction_polynomial();
    CHECK_FALSE(reducible_by_products(chosen, p));
    for (const auto& cand : monic_of_degree(p, k)) {
      if (cand == chosen) break;
      CHECK(reducible_by_products(cand, p));
    }
  }
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(make_field(4, 1), Error);
  try {
    make_field(9, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPrime);
  }
  try {
    field_of_order(6);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParameter);
  }
  CHECK_THROWS_AS(make_field(2, 17), Error);
  CHECK_THROWS_AS(make_field(3, 1)->inv(0), Error);
}

TEST_CASE("row_reduce examples") {
  auto f2 = field_of_order(2);
  auto e1 = FieldVector::unit(f2, 2, 1);
  CHECK(row_reduce(std::vector{e1, e1}).rank == 1);
  auto f3 = field_of_order(3);
  std::vector<FieldVector> rows{{f3, {1, 1}}, {f3, {1, 2}}};
  CHECK(row_reduce(rows).rank == 2);
  CHECK(row_reduce(std::vector<FieldVector>{}).rank == 0);
  std::vector<FieldVector> mixed{{f2, {1, 0}}, {f3, {1, 0}}};
  CHECK_THROWS_AS(row_reduce(mixed), Error);
  std::vector<FieldVector> ragged{{f2, {1, 0}}, {f2, {1, 0, 1}}};
  CHECK_THROWS_AS(row_reduce(ragged), Error);
}

TEST_CASE("row_reduce is idempotent") {
  std::mt19937 rng(11);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto f = field_of_order(q);
    std::uniform_int_distribution<Element> pick(0, q - 1);
    for (int t = 0; t < 200; ++t) {
      std::vector<FieldVector> rows(1 + t % 5, FieldVector::zero(f, 4));
      for (auto& r : rows) {
        for (auto& c : r.coords) c = pick(rng);
      }
      const auto once = row_reduce(rows);
      const auto twice = row_reduce(once.basis);
      REQUIRE(once.rank == twice.rank);
      REQUIRE(once.basis == twice.basis);
    }
  }
}

TEST_CASE("span_contains examples") {
  auto f2 = field_of_order(2);
  CHECK(span_contains(std::vector{FieldVector::unit(f2, 3, 1)}, FieldVector::zero(f2, 3)));
  CHECK_FALSE(span_contains(std::vector{FieldVector::ones(f2, 3)}, FieldVector{f2, {1, 1, 0}}));
  CHECK(span_contains(std::vector{FieldVector::unit(f2, 3, 1), FieldVector::ones(f2, 3)}, FieldVector{f2, {0, 1, 1}}));
}

TEST_CASE("span_contains agrees with enumerating all combinations") {
  std::mt19937 rng(5);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto f = field_of_order(q);
    std::uniform_int_distribution<Element> pick(0, q - 1);
    for (int t = 0; t < 300; ++t) {
      const std::size_t g = 1 + t % 4;
      std::vector<FieldVector> gens(g, FieldVector::zero(f, 4));
      for (auto& v : gens) {
        for (auto& c : v.coords) c = pick(rng);
      }
      FieldVector target = FieldVector::zero(f, 4);
      for (auto& c : target.coords) c = pick(rng);
      bool brute = false;
      std::size_t combos = 1;
      for (std::size_t i = 0; i < g; ++i) combos *= q;
      for (std::size_t idx = 0; idx < combos && !brute; ++idx) {
        FieldVector acc = FieldVector::zero(f, 4);
        std::size_t r = idx;
        for (std::size_t i = 0; i < g; ++i) {
          acc = acc + scale(static_cast<Element>(r % q), gens[i]);
          r /= q;
        }
        brute = acc == target;
      }
      REQUIRE(span_contains(gens, target) == brute);
    }
  }
}

TEST_CASE("poly_eval") {
  Polynomial id{{0, 1}};
  CHECK(poly_eval(id, Rational(7)) == 7);
  Polynomial p{{1, 0, 1}};
  CHECK(poly_eval(p, Rational(2)) == 5);
  Polynomial r{{-3, 0, 1}};
  CHECK(std::abs(poly_eval(r, std::sqrt(3.0))) < 1e-12);
  CHECK(Polynomial{{0, 0}}.degree() == -1);
  CHECK(Polynomial{{1, 2, 0}}.degree() == 1);
}

}
