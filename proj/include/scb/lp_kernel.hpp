#pragma once

// Exact rational linear programming: two-phase primal simplex with Bland's
// rule, plus a best-first driver for small binary minimisation problems.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "scb/rational.hpp"

namespace scb {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs = 0;
};

struct VariableBound {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;

  static VariableBound free() { return VariableBound{std::nullopt, std::nullopt}; }
};

struct LinearProgram {
  std::vector<Rational> objective;  // minimised
  std::vector<LinearConstraint> constraints;
  std::vector<VariableBound> bounds;  // empty: every variable >= 0

  std::size_t num_vars() const noexcept { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;
  std::vector<Rational> solution;
};

inline constexpr std::size_t kMaxLpVariables = 128;

// Throws TooLarge beyond kMaxLpVariables, DimensionMismatch on ragged input.
LpResult solve_lp(const LinearProgram& lp);

std::optional<std::vector<Rational>> solve_feasibility(std::size_t num_vars,
                                                       const std::vector<LinearConstraint>& constraints,
                                                       const std::vector<VariableBound>& bounds = {});

// True iff x satisfies every constraint and bound exactly.
bool satisfies(const LinearProgram& lp, std::span<const Rational> x);

using BinaryVector = std::vector<std::uint8_t>;

struct BinaryOptimum {
  Rational value = 0;
  BinaryVector bits;
  std::uint64_t oracle_calls = 0;
};

// Visits binary vectors in increasing weight sum w_i b_i, ties broken by the
// vector read as a binary number with b_0 most significant (so the all-ones
// vector comes last among equal weights), and returns the first one the
// oracle accepts. Vectors rejected by `prefilter` are skipped without
// calling the oracle. Throws NoFeasibleAssignment when none is accepted and
// TooLarge beyond 20 entries.
BinaryOptimum minimize_over_binaries(std::span<const Rational> weights,
                                     const std::function<bool(const BinaryVector&)>& oracle,
                                     const std::function<bool(const BinaryVector&)>& prefilter = {});

}  // namespace scb
