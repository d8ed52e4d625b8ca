#include <functional>
#include <optional>
#include <random>

#include "doctest.h"
#include "scb/error.hpp"
#include "scb/lp_kernel.hpp"

using namespace scb;

namespace {

// Solves the square system M x = r exactly; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> r) {
  const std::size_t n = r.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    std::swap(r[piv], r[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      r[i] -= f * r[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r[i] / m[i][i];
  return x;
}

// Minimum over all basic feasible points of {A x <= b, 0 <= x <= u}.
std::optional<Rational> vertex_enumeration(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints) {
    rows.push_back(c.coeffs);
    rhs.push_back(c.rhs);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> lo(n, Rational(0)), hi(n, Rational(0));
    lo[i] = -1;
    hi[i] = 1;
    rows.push_back(lo);
    rhs.push_back(0);
    rows.push_back(hi);
    rhs.push_back(*lp.bounds[i].upper);
  }
  std::optional<Rational> best;
  const std::size_t m = rows.size();
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      std::vector<std::vector<Rational>> sm;
      std::vector<Rational> sr;
      for (auto i : pick) {
        sm.push_back(rows[i]);
        sr.push_back(rhs[i]);
      }
      auto x = solve_square(sm, sr);
      if (!x) return;
      for (std::size_t i = 0; i < m; ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += rows[i][j] * (*x)[j];
        if (lhs > rhs[i]) return;
      }
      Rational v = 0;
      for (std::size_t j = 0; j < n; ++j) v += lp.objective[j] * (*x)[j];
      if (!best || v < *best) best = v;
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace

TEST_SUITE("lp_kernel") {

TEST_CASE("textbook LP") {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18
  LinearProgram lp;
  lp.objective = {-3, -5};
  lp.constraints = {{{1, 0}, Relation::LessEqual, 4}, {{0, 2}, Relation::LessEqual, 12},
                    {{3, 2}, Relation::LessEqual, 18}};
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == -36);
  CHECK(r.solution == std::vector<Rational>{2, 6});
  CHECK(satisfies(lp, r.solution));
}

TEST_CASE("equalities, >= rows and negative right-hand sides") {
  LinearProgram lp;
  lp.objective = {1, 1, 1};
  lp.constraints = {{{1, 1, 0}, Relation::Equal, 3}, {{0, 1, 1}, Relation::GreaterEqual, 2},
                    {{-1, 0, 1}, Relation::LessEqual, -1}};
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 3);
  CHECK(satisfies(lp, r.solution));
}

TEST_CASE("free and bounded variables") {
  LinearProgram lp;
  lp.objective = {1, 0};
  lp.constraints = {{{1, 1}, Relation::Equal, make_rational(1, 2)}};
  lp.bounds = {VariableBound::free(), VariableBound{Rational(-2), Rational(3)}};
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == make_rational(-5, 2));
  CHECK(r.solution[1] == 3);
}

TEST_CASE("infeasible and unbounded") {
  LinearProgram inf;
  inf.objective = {1};
  inf.constraints = {{{1}, Relation::LessEqual, -1}};
  CHECK(solve_lp(inf).status == LpStatus::Infeasible);
  LinearProgram unb;
  unb.objective = {-1, 0};
  unb.constraints = {{{1, -1}, Relation::LessEqual, 1}};
  CHECK(solve_lp(unb).status == LpStatus::Unbounded);
  CHECK_FALSE(solve_feasibility(1, inf.constraints).has_value());
}

TEST_CASE("redundant equality rows") {
  LinearProgram lp;
  lp.objective = {1, 2};
  lp.constraints = {{{1, 1}, Relation::Equal, 2}, {{2, 2}, Relation::Equal, 4}};
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 2);
}

TEST_CASE("simplex agrees with vertex enumeration on random LPs") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> coef(-5, 5), cnt(1, 4), dim(2, 3);
  int feasible = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    LinearProgram lp;
    for (std::size_t j = 0; j < n; ++j) lp.objective.emplace_back(coef(rng));
    const int m = cnt(rng);
    for (int i = 0; i < m; ++i) {
      LinearConstraint c;
      for (std::size_t j = 0; j < n; ++j) c.coeffs.emplace_back(coef(rng));
      c.relation = Relation::LessEqual;
      c.rhs = coef(rng);
      lp.constraints.push_back(c);
    }
    lp.bounds.assign(n, VariableBound{Rational(0), Rational(10)});
    const auto r = solve_lp(lp);
    const auto ref = vertex_enumeration(lp);
    CAPTURE(t);
    REQUIRE((r.status == LpStatus::Optimal) == ref.has_value());
    if (ref) {
      ++feasible;
      REQUIRE(r.value == *ref);
      REQUIRE(satisfies(lp, r.solution));
    }
  }
  CHECK(feasible > 300);
}

TEST_CASE("variable limit") {
  LinearProgram lp;
  lp.objective.assign(kMaxLpVariables + 1, Rational(0));
  CHECK_THROWS_AS(solve_lp(lp), Error);
}

TEST_CASE("binary minimisation agrees with full enumeration") {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> w(0, 6);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 8;
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < n; ++i) weights.push_back(make_rational(w(rng), 1 + t % 3));
    // accept vectors whose code lands in a random set
    std::vector<char> accept(1u << n);
    std::bernoulli_distribution coin(0.3);
    for (auto& a : accept) a = coin(rng);
    accept.back() = 1;
    auto code = [&](const BinaryVector& b) {
      std::uint32_t c = 0;
      for (std::size_t i = 0; i < n; ++i) c |= static_cast<std::uint32_t>(b[i]) << i;
      return c;
    };
    auto res = minimize_over_binaries(weights, [&](const BinaryVector& b) { return accept[code(b)] != 0; });
    Rational best = -1;
    for (std::uint32_t c = 0; c < (1u << n); ++c) {
      if (!accept[c]) continue;
      Rational v = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (c >> i & 1u) v += weights[i];
      if (best < 0 || v < best) best = v;
    }
    REQUIRE(res.value == best);
    REQUIRE(accept[code(res.bits)]);
  }
}

TEST_CASE("binary minimisation tie order and errors") {
  std::vector<Rational> w{1, 1};
  // both single-bit vectors cost 1; b_0 is the most significant bit, so 01 precedes 10
  auto r = minimize_over_binaries(w, [](const BinaryVector& b) { return b[0] + b[1] == 1; });
  CHECK(r.bits == BinaryVector{0, 1});
  CHECK_THROWS_AS(minimize_over_binaries(w, [](const BinaryVector&) { return false; }), Error);
  std::vector<Rational> big(21, Rational(1));
  CHECK_THROWS_AS(minimize_over_binaries(big, [](const BinaryVector&) { return true; }), Error);
  // prefiltered vectors never reach the oracle
  int calls = 0;
  minimize_over_binaries(
      w, [&](const BinaryVector& b) { ++calls; return b[0] && b[1]; },
      [](const BinaryVector& b) { return b[0] == b[1]; });
  CHECK(calls == 2);
}

}
