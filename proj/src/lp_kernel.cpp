#include "scb/lp_kernel.hpp"

#include <algorithm>
#include <numeric>

#include "scb/error.hpp"

namespace scb {

namespace {

struct Column {
  std::size_t var;  // original variable
  int sign;         // +1 or -1
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows, std::vector<Rational>(cols + 1)), basis_(rows, 0) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][cols_]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = t_[r][c];
    for (auto& x : t_[r]) x /= piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
      }
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  // Minimises cost over columns with allowed[j]; returns false if unbounded.
  bool optimise(const std::vector<Rational>& cost, const std::vector<char>& allowed) {
    while (true) {
      // Reduced costs d_j = c_j - c_B B^{-1} A_j.
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_ && enter == cols_; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) {
          if (t_[i][j] != 0) d -= cost[basis_[i]] * t_[i][j];
        }
        if (d < 0) enter = j;
      }
      if (enter == cols_) return true;
      std::size_t leave = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        const Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t nv = lp.num_vars();
  if (nv > kMaxLpVariables) throw Error(ErrorCode::TooLarge, "LP exceeds 128 variables");
  if (!lp.bounds.empty() && lp.bounds.size() != nv) {
    throw Error(ErrorCode::DimensionMismatch, "one bound per variable required");
  }
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != nv) throw Error(ErrorCode::DimensionMismatch, "constraint width differs from objective");
  }

  // x_j = offset_j + sum over its columns of sign * y.
  std::vector<Rational> offset(nv, 0);
  std::vector<Column> columns;
  std::vector<LinearConstraint> rows = lp.constraints;
  for (std::size_t j = 0; j < nv; ++j) {
    const VariableBound b = lp.bounds.empty() ? VariableBound{} : lp.bounds[j];
    if (b.lower) {
      offset[j] = *b.lower;
      columns.push_back({j, +1});
      if (b.upper) {
        LinearConstraint ub;
        ub.coeffs.assign(nv, 0);
        ub.coeffs[j] = 1;
        ub.relation = Relation::LessEqual;
        ub.rhs = *b.upper;
        rows.push_back(std::move(ub));
      }
    } else if (b.upper) {
      offset[j] = *b.upper;
      columns.push_back({j, -1});
    } else {
      columns.push_back({j, +1});
      columns.push_back({j, -1});
    }
  }

  const std::size_t m = rows.size();
  const std::size_t ny = columns.size();
  // Columns: structural y, one slack per inequality, one artificial per row.
  std::size_t n_slack = 0;
  for (const auto& r : rows) n_slack += r.relation != Relation::Equal ? 1 : 0;
  const std::size_t art0 = ny + n_slack;
  const std::size_t ncols = art0 + m;
  Tableau tab(m, ncols);

  std::size_t slack = ny;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = rows[i];
    Rational rhs = r.rhs;
    for (std::size_t j = 0; j < nv; ++j) rhs -= r.coeffs[j] * offset[j];
    for (std::size_t c = 0; c < ny; ++c) tab.at(i, c) = r.coeffs[columns[c].var] * columns[c].sign;
    if (r.relation == Relation::LessEqual) tab.at(i, slack++) = 1;
    if (r.relation == Relation::GreaterEqual) tab.at(i, slack++) = -1;
    tab.rhs(i) = rhs;
    if (rhs < 0) {
      for (std::size_t c = 0; c <= ncols; ++c) tab.at(i, c) = -tab.at(i, c);
    }
    tab.at(i, art0 + i) = 1;
    tab.basis()[i] = art0 + i;
  }

  // Phase I.
  std::vector<Rational> cost(ncols, 0);
  for (std::size_t i = 0; i < m; ++i) cost[art0 + i] = 1;
  std::vector<char> allowed(ncols, 1);
  tab.optimise(cost, allowed);
  Rational infeas = 0;
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis()[i] >= art0) infeas += tab.rhs(i);
  }
  LpResult result;
  if (infeas != 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  // Drive artificials out of the basis; rows where that is impossible are redundant.
  for (std::size_t i = tab.rows(); i-- > 0;) {
    if (tab.basis()[i] < art0) continue;
    std::size_t c = 0;
    while (c < art0 && tab.at(i, c) == 0) ++c;
    if (c < art0) {
      tab.pivot(i, c);
    } else {
      tab.drop_row(i);
    }
  }

  // Phase II.
  std::fill(cost.begin(), cost.end(), Rational(0));
  for (std::size_t c = 0; c < ny; ++c) cost[c] = lp.objective[columns[c].var] * columns[c].sign;
  for (std::size_t c = art0; c < ncols; ++c) allowed[c] = 0;
  if (!tab.optimise(cost, allowed)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  std::vector<Rational> y(ncols, 0);
  for (std::size_t i = 0; i < tab.rows(); ++i) y[tab.basis()[i]] = tab.rhs(i);
  result.status = LpStatus::Optimal;
  result.solution = offset;
  for (std::size_t c = 0; c < ny; ++c) result.solution[columns[c].var] += y[c] * columns[c].sign;
  result.value = 0;
  for (std::size_t j = 0; j < nv; ++j) result.value += lp.objective[j] * result.solution[j];
  return result;
}

std::optional<std::vector<Rational>> solve_feasibility(std::size_t num_vars,
                                                       const std::vector<LinearConstraint>& constraints,
                                                       const std::vector<VariableBound>& bounds) {
  LinearProgram lp;
  lp.objective.assign(num_vars, 0);
  lp.constraints = constraints;
  lp.bounds = bounds;
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.solution;
}

bool satisfies(const LinearProgram& lp, std::span<const Rational> x) {
  if (x.size() != lp.num_vars()) return false;
  for (const auto& c : lp.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coeffs[j] * x[j];
    if (c.relation == Relation::LessEqual && lhs > c.rhs) return false;
    if (c.relation == Relation::GreaterEqual && lhs < c.rhs) return false;
    if (c.relation == Relation::Equal && lhs != c.rhs) return false;
  }
  for (std::size_t j = 0; j < lp.bounds.size(); ++j) {
    if (lp.bounds[j].lower && x[j] < *lp.bounds[j].lower) return false;
    if (lp.bounds[j].upper && x[j] > *lp.bounds[j].upper) return false;
  }
  if (lp.bounds.empty()) {
    for (const auto& v : x) {
      if (v < 0) return false;
    }
  }
  return true;
}

BinaryOptimum minimize_over_binaries(std::span<const Rational> weights,
                                     const std::function<bool(const BinaryVector&)>& oracle,
                                     const std::function<bool(const BinaryVector&)>& prefilter) {
  const std::size_t len = weights.size();
  if (len > 20) throw Error(ErrorCode::TooLarge, "binary enumeration limited to 20 entries");

  // Scale to integers so that sorting stays cheap.
  mpz_class lcm = 1;
  for (const auto& w : weights) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den_mpz_t());
  std::vector<mpz_class> iw;
  for (const auto& w : weights) iw.push_back(mpz_class(w.get_num() * (lcm / w.get_den())));

  struct Candidate {
    mpz_class weight;
    std::uint32_t code;  // b_0 is the most significant bit
  };
  std::vector<Candidate> cands;
  cands.reserve(std::size_t{1} << len);
  BinaryVector bits(len);
  for (std::uint32_t code = 0; code < (1u << len); ++code) {
    for (std::size_t i = 0; i < len; ++i) bits[i] = (code >> (len - 1 - i)) & 1u;
    if (prefilter && !prefilter(bits)) continue;
    mpz_class w = 0;
    for (std::size_t i = 0; i < len; ++i) {
      if (bits[i]) w += iw[i];
    }
    cands.push_back({std::move(w), code});
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.code < b.code;
  });

  BinaryOptimum out;
  for (const auto& c : cands) {
    for (std::size_t i = 0; i < len; ++i) bits[i] = (c.code >> (len - 1 - i)) & 1u;
    ++out.oracle_calls;
    if (oracle(bits)) {
      out.bits = bits;
      out.value = Rational(c.weight, lcm);
      out.value.canonicalize();
      return out;
    }
  }
  throw Error(ErrorCode::NoFeasibleAssignment, "no binary vector satisfies the oracle");
}

}  // namespace scb
