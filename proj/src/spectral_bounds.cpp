#include "scb/spectral_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "json.hpp"
#include "scb/error.hpp"
#include "scb/lp_kernel.hpp"

namespace scb {

namespace {

constexpr double kFloatCountTolerance = 1e-9;
constexpr double kWitnessSlack = 1e-6;
const Rational kCoefficientBox(1000000);

Rational rational_power(const Rational& x, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

void check_degree(const Polynomial& p, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidParameter, "k must be >= 0");
  if (p.degree() > k) {
    throw Error(ErrorCode::DegreeTooHigh,
                "polynomial degree " + std::to_string(p.degree()) + " exceeds k = " + std::to_string(k));
  }
}

// Diagonal of p(A) at every vertex.
std::vector<Rational> diagonal_values(const Graph& g, const Polynomial& p) {
  const int deg = std::max(p.degree(), 0);
  const auto walks = closed_walk_counts(g, deg);
  std::vector<Rational> out(g.order(), Rational(0));
  for (std::size_t v = 0; v < g.order(); ++v) {
    for (int i = 0; i <= p.degree(); ++i) out[v] += p.coeffs[i] * Rational(static_cast<long>(walks[v][i]));
  }
  return out;
}

std::string spectrum_digest(const Spectrum& s, int k) {
  return "k=" + std::to_string(k) + " spectrum=" + s.to_json();
}

int transitions(const BinaryVector& b) {
  int t = 0;
  for (std::size_t j = 1; j < b.size(); ++j) t += b[j] != b[j - 1];
  return t;
}

// The Inertia-type optimisation for a fixed sign pattern b, against a set of
// vertex profiles. Variables are c_0..c_k with p(x) = sum c_i (x/rho)^i.
// For a profile u the system is
//   D_u c = 0,  D_v c >= 0 (v != u),  V_j c <= -1 (b_j = 0)  [, |c_i| <= box].
// Infeasibility certificates are kept as cores: the subset of V-rows carrying
// positive Farkas weight. Any pattern whose zero set contains a core is
// rejected for that profile without solving anything.
class InertiaOracle {
 public:
  InertiaOracle(const Spectrum& spectrum, std::vector<std::vector<Rational>> profiles, int k)
      : spectrum_(spectrum), profiles_(std::move(profiles)), k_(k), cores_(profiles_.size()) {
    const std::size_t r1 = spectrum.distinct();
    if (!spectrum.exact) {
      double top = 0.0;
      for (double v : spectrum.values) top = std::max(top, std::abs(v));
      rho_ = Rational(static_cast<long>(std::ceil(top)));
      if (rho_ == 0) rho_ = 1;
      boxed_ = true;
    }
    vrows_.assign(r1, std::vector<Rational>(k + 1));
    for (std::size_t j = 0; j < r1; ++j) {
      if (spectrum.exact) {
        const Rational base = spectrum.exact_values[j];
        for (int i = 0; i <= k; ++i) vrows_[j][i] = rational_power(base, i);
      } else {
        const double base = spectrum.values[j] / rho_.get_d();
        for (int i = 0; i <= k; ++i) vrows_[j][i] = rationalize(std::pow(base, i));
      }
    }
    // Profiles arrive as raw walk counts; move them to the scaled basis.
    for (auto& prof : profiles_) {
      for (int i = 0; i <= k; ++i) prof[i] /= rational_power(rho_, i);
    }
  }

  bool operator()(const BinaryVector& b) {
    std::uint32_t zero_mask = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j]) zero_mask |= 1u << j;
    }
    for (std::size_t u = 0; u < profiles_.size(); ++u) {
      bool blocked = false;
      for (std::uint32_t core : cores_[u]) {
        if ((core & ~zero_mask) == 0) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (auto core = farkas_core(u, zero_mask)) {
        cores_[u].push_back(*core);
        continue;
      }
      auto c = solve_primal(u, zero_mask);
      if (!c) throw Error(ErrorCode::InternalError, "Farkas system and primal disagree");
      if (!spectrum_.exact && !float_check(*c, zero_mask)) continue;
      witness_ = to_polynomial(*c);
      return true;
    }
    return false;
  }

  const Polynomial& witness() const { return witness_; }
  bool boxed() const { return boxed_; }

 private:
  std::optional<std::uint32_t> farkas_core(std::size_t u, std::uint32_t zero_mask) const {
    // Rows: u (free), other profiles (>= 0, as -D_v c <= 0), zero rows, box rows.
    const std::size_t cols = static_cast<std::size_t>(k_) + 1;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<VariableBound> bounds;
    std::vector<int> zero_index;
    rows.push_back(profiles_[u]);
    rhs.push_back(0);
    bounds.push_back(VariableBound::free());
    zero_index.push_back(-1);
    for (std::size_t v = 0; v < profiles_.size(); ++v) {
      if (v == u) continue;
      std::vector<Rational> row(cols);
      for (std::size_t i = 0; i < cols; ++i) row[i] = -profiles_[v][i];
      rows.push_back(std::move(row));
      rhs.push_back(0);
      bounds.push_back(VariableBound{});
      zero_index.push_back(-1);
    }
    for (std::size_t j = 0; j < vrows_.size(); ++j) {
      if (!(zero_mask >> j & 1u)) continue;
      rows.push_back(vrows_[j]);
      rhs.push_back(-1);
      bounds.push_back(VariableBound{});
      zero_index.push_back(static_cast<int>(j));
    }
    if (boxed_) {
      for (std::size_t i = 0; i < cols; ++i) {
        for (int sign : {1, -1}) {
          std::vector<Rational> row(cols, Rational(0));
          row[i] = sign;
          rows.push_back(std::move(row));
          rhs.push_back(kCoefficientBox);
          bounds.push_back(VariableBound{});
          zero_index.push_back(-1);
        }
      }
    }
    const std::size_t m = rows.size();
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i < cols; ++i) {
      LinearConstraint c;
      c.coeffs.resize(m);
      for (std::size_t t = 0; t < m; ++t) c.coeffs[t] = rows[t][i];
      c.relation = Relation::Equal;
      c.rhs = 0;
      cons.push_back(std::move(c));
    }
    LinearConstraint norm;
    norm.coeffs = rhs;
    norm.relation = Relation::Equal;
    norm.rhs = -1;
    cons.push_back(std::move(norm));
    auto y = solve_feasibility(m, cons, bounds);
    if (!y) return std::nullopt;
    std::uint32_t core = 0;
    for (std::size_t t = 0; t < m; ++t) {
      if (zero_index[t] >= 0 && (*y)[t] > 0) core |= 1u << zero_index[t];
    }
    return core;
  }

  std::optional<std::vector<Rational>> solve_primal(std::size_t u, std::uint32_t zero_mask) const {
    std::vector<LinearConstraint> cons;
    cons.push_back({profiles_[u], Relation::Equal, 0});
    for (std::size_t v = 0; v < profiles_.size(); ++v) {
      if (v != u) cons.push_back({profiles_[v], Relation::GreaterEqual, 0});
    }
    for (std::size_t j = 0; j < vrows_.size(); ++j) {
      if (zero_mask >> j & 1u) cons.push_back({vrows_[j], Relation::LessEqual, -1});
    }
    std::vector<VariableBound> bounds(k_ + 1, VariableBound::free());
    if (boxed_) {
      for (auto& b : bounds) b = VariableBound{-kCoefficientBox, kCoefficientBox};
    }
    return solve_feasibility(k_ + 1, cons, bounds);
  }

  bool float_check(const std::vector<Rational>& c, std::uint32_t zero_mask) const {
    const double rho = rho_.get_d();
    for (std::size_t j = 0; j < vrows_.size(); ++j) {
      if (!(zero_mask >> j & 1u)) continue;
      double acc = 0.0;
      const double x = spectrum_.values[j] / rho;
      for (int i = k_; i >= 0; --i) acc = acc * x + c[i].get_d();
      if (acc > -1.0 + kWitnessSlack) return false;
    }
    return true;
  }

  Polynomial to_polynomial(const std::vector<Rational>& c) const {
    Polynomial p;
    p.coeffs.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) p.coeffs[i] = c[i] / rational_power(rho_, static_cast<int>(i));
    return p;
  }

  const Spectrum& spectrum_;
  std::vector<std::vector<Rational>> profiles_;
  int k_;
  Rational rho_{1};
  bool boxed_ = false;
  std::vector<std::vector<Rational>> vrows_;
  std::vector<std::vector<std::uint32_t>> cores_;
  Polynomial witness_;
};

BoundReport run_inertia(const Spectrum& spectrum, std::vector<std::vector<Rational>> profiles, int k,
                        std::string name) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "k must be >= 1");
  const std::size_t r1 = spectrum.distinct();
  if (r1 > 20) throw Error(ErrorCode::TooLarge, "more than 20 distinct eigenvalues");
  std::vector<Rational> weights;
  for (auto m : spectrum.mults) weights.emplace_back(static_cast<long>(m));
  InertiaOracle oracle(spectrum, std::move(profiles), k);
  const auto best = minimize_over_binaries(
      weights, [&](const BinaryVector& b) { return oracle(b); },
      [&](const BinaryVector& b) { return transitions(b) <= k; });
  BoundReport rep = make_report(std::move(name), best.value, k, spectrum.exact, spectrum_digest(spectrum, k));
  rep.witness = oracle.witness();
  rep.notes.push_back("oracle calls: " + std::to_string(best.oracle_calls));
  if (oracle.boxed()) rep.notes.push_back("floating spectrum: scaled coefficients boxed, witness rechecked");
  return rep;
}

// Divided-difference weight 1 / prod_{j <= s, j != i} (theta_i - theta_j).
Rational dd_weight(const std::vector<Rational>& th, std::size_t i, std::size_t s) {
  Rational d(1);
  for (std::size_t j = 0; j <= s; ++j) {
    if (j != i) d *= th[i] - th[j];
  }
  return 1 / d;
}

std::vector<Rational> exact_thetas(const Spectrum& s) {
  std::vector<Rational> th(s.distinct());
  for (std::size_t i = 0; i < th.size(); ++i) th[i] = s.rational(i);
  return th;
}

Rational pow_int(long base, int e) {
  if (e < 0) return 1 / pow_int(base, -e);
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return Rational(r);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::string BoundReport::to_json() const {
  nlohmann::json j;
  j["bound"] = bound_name;
  j["raw"] = scb::to_string(raw_value);
  j["floored"] = floored;
  j["k"] = k;
  j["exact"] = exact;
  j["inputs"] = inputs;
  if (witness) {
    auto arr = nlohmann::json::array();
    for (const auto& c : witness->coeffs) arr.push_back(scb::to_string(c));
    j["witness"] = arr;
  }
  j["notes"] = notes;
  return j.dump();
}

BoundReport make_report(std::string name, Rational raw, int k, bool exact, std::string inputs) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.raw_value = std::move(raw);
  r.raw_value.canonicalize();
  r.floored = floor_to_int(r.raw_value);
  r.k = k;
  r.exact = exact;
  r.inputs = std::move(inputs);
  return r;
}

BoundReport inertia_type_bound(const Graph& g, const Spectrum& spectrum, const Polynomial& p, int k) {
  check_degree(p, k);
  if (static_cast<std::size_t>(spectrum.order()) != g.order()) {
    throw Error(ErrorCode::DimensionMismatch, "spectrum and graph orders differ");
  }
  const auto diag = diagonal_values(g, p);
  const Rational w_max = *std::max_element(diag.begin(), diag.end());
  const Rational w_min = *std::min_element(diag.begin(), diag.end());
  std::int64_t above = 0;
  std::int64_t below = 0;
  for (std::size_t j = 0; j < spectrum.distinct(); ++j) {
    bool ge, le;
    if (spectrum.exact) {
      const Rational v = poly_eval(p, spectrum.exact_values[j]);
      ge = v >= w_min;
      le = v <= w_max;
    } else {
      const double v = poly_eval(p, spectrum.values[j]);
      ge = v >= w_min.get_d() - kFloatCountTolerance;
      le = v <= w_max.get_d() + kFloatCountTolerance;
    }
    if (ge) above += spectrum.mults[j];
    if (le) below += spectrum.mults[j];
  }
  BoundReport rep = make_report("inertia", Rational(static_cast<long>(std::min(above, below))), k,
                                spectrum.exact, spectrum_digest(spectrum, k));
  rep.witness = p;
  rep.notes.push_back("W(p)=" + scb::to_string(w_max) + " w(p)=" + scb::to_string(w_min));
  return rep;
}

BoundReport inertia_milp(const Graph& g, const Spectrum& spectrum, int k) {
  if (static_cast<std::size_t>(spectrum.order()) != g.order()) {
    throw Error(ErrorCode::DimensionMismatch, "spectrum and graph orders differ");
  }
  const auto walks = closed_walk_counts(g, k);
  std::set<std::vector<std::int64_t>> distinct(walks.begin(), walks.end());
  std::vector<std::vector<Rational>> profiles;
  for (const auto& row : distinct) {
    std::vector<Rational> prof;
    for (auto w : row) prof.emplace_back(static_cast<long>(w));
    profiles.push_back(std::move(prof));
  }
  auto rep = run_inertia(spectrum, std::move(profiles), k, "inertia-milp");
  rep.notes.push_back("vertex profiles: " + std::to_string(distinct.size()));
  return rep;
}

BoundReport inertia_milp_walkreg(const Spectrum& spectrum, int k) {
  std::vector<Rational> prof;
  for (int i = 0; i <= k; ++i) prof.push_back(spectrum.power_sum(i));
  return run_inertia(spectrum, {prof}, k, "inertia-milp-walkreg");
}

BoundReport ratio_type_bound(const Spectrum& spectrum, const Polynomial& p, const Rational& w_max, int k) {
  check_degree(p, k);
  if (spectrum.distinct() < 2) throw Error(ErrorCode::TooFewEigenvalues, "need at least two distinct eigenvalues");
  const auto th = exact_thetas(spectrum);
  const Rational top = poly_eval(p, th[0]);
  Rational lambda = poly_eval(p, th[1]);
  for (std::size_t i = 2; i < th.size(); ++i) lambda = std::min(lambda, Rational(poly_eval(p, th[i])));
  if (top <= lambda) {
    throw Error(ErrorCode::AssumptionViolated, "p(theta_0) <= lambda(p)");
  }
  const Rational n(static_cast<long>(spectrum.order()));
  BoundReport rep = make_report("ratio", n * (w_max - lambda) / (top - lambda), k, spectrum.exact,
                                spectrum_digest(spectrum, k));
  rep.witness = p;
  rep.notes.push_back("W(p)=" + scb::to_string(w_max) + " lambda(p)=" + scb::to_string(lambda));
  return rep;
}

BoundReport ratio_type_bound(const Graph& g, const Spectrum& spectrum, const Polynomial& p, int k) {
  check_degree(p, k);
  if (!g.is_regular()) throw Error(ErrorCode::NotRegular, "graph is not regular");
  const auto diag = diagonal_values(g, p);
  return ratio_type_bound(spectrum, p, *std::max_element(diag.begin(), diag.end()), k);
}

BoundReport ratio_alpha2_closed(const Spectrum& spectrum) {
  const std::size_t r = spectrum.distinct() - 1;
  if (spectrum.distinct() < 3) throw Error(ErrorCode::TooFewEigenvalues, "alpha_2 bound needs r >= 2");
  const auto th = exact_thetas(spectrum);
  std::size_t i = 0;
  while (i <= r && th[i] > -1) ++i;
  if (i > r) throw Error(ErrorCode::NotApplicable, "no eigenvalue <= -1");
  if (i == 0) throw Error(ErrorCode::NotApplicable, "largest eigenvalue is <= -1");
  const Rational n(static_cast<long>(spectrum.order()));
  const Rational value = n * (th[0] + th[i] * th[i - 1]) / ((th[0] - th[i]) * (th[0] - th[i - 1]));
  auto rep = make_report("ratio-alpha2", value, 2, spectrum.exact, spectrum_digest(spectrum, 2));
  rep.notes.push_back("i=" + std::to_string(i));
  return rep;
}

BoundReport ratio_alpha3_closed(const Spectrum& spectrum, std::int64_t delta) {
  if (spectrum.distinct() < 4) throw Error(ErrorCode::TooFewEigenvalues, "alpha_3 bound needs r >= 3");
  const std::size_t r = spectrum.distinct() - 1;
  const auto th = exact_thetas(spectrum);
  if (th[r] == -1) throw Error(ErrorCode::NotApplicable, "theta_r = -1");
  const Rational d(static_cast<long>(delta));
  const Rational threshold = -(th[0] * th[0] + th[0] * th[r] - d) / (th[0] * (th[r] + 1));
  std::size_t s = 0;
  bool found = false;
  for (std::size_t i = 0; i <= r; ++i) {
    if (th[i] >= threshold) {
      s = i;
      found = true;
    }
  }
  if (!found || s == 0) throw Error(ErrorCode::NotApplicable, "no admissible theta_s");
  if (s + 1 > r) throw Error(ErrorCode::NotApplicable, "theta_{s+1} does not exist");
  const Rational n(static_cast<long>(spectrum.order()));
  const Rational num = d - th[0] * (th[s] + th[s + 1] + th[r]) - th[s] * th[s + 1] * th[r];
  const Rational den = (th[0] - th[s]) * (th[0] - th[s + 1]) * (th[0] - th[r]);
  auto rep = make_report("ratio-alpha3", n * num / den, 3, spectrum.exact, spectrum_digest(spectrum, 3));
  rep.notes.push_back("s=" + std::to_string(s) + " threshold=" + scb::to_string(threshold));
  return rep;
}

BoundReport minor_polynomial_lp(const Spectrum& spectrum, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "k must be >= 1");
  const std::size_t r = spectrum.distinct() - 1;
  const Rational m0(static_cast<long>(spectrum.mults[0]));
  if (static_cast<std::size_t>(k) >= r) {
    auto rep = make_report("ratio-lp", m0, k, spectrum.exact, spectrum_digest(spectrum, k));
    rep.notes.push_back("k >= r: no divided-difference constraint, optimum is m_0");
    return rep;
  }
  const auto th = exact_thetas(spectrum);
  LinearProgram lp;
  lp.objective.resize(r);
  for (std::size_t i = 1; i <= r; ++i) lp.objective[i - 1] = Rational(static_cast<long>(spectrum.mults[i]));
  for (std::size_t s = static_cast<std::size_t>(k) + 1; s <= r; ++s) {
    LinearConstraint c;
    c.coeffs.assign(r, Rational(0));
    for (std::size_t i = 1; i <= s; ++i) c.coeffs[i - 1] = dd_weight(th, i, s);
    c.relation = Relation::Equal;
    c.rhs = -dd_weight(th, 0, s);
    lp.constraints.push_back(std::move(c));
  }
  const auto res = solve_lp(lp);
  if (res.status != LpStatus::Optimal) throw Error(ErrorCode::InternalError, "minor-polynomial LP has no optimum");
  auto rep = make_report("ratio-lp", m0 + res.value, k, spectrum.exact, spectrum_digest(spectrum, k));
  return rep;
}

BoundReport phase_rotation_closed_bound(std::uint32_t q, int n, int k) {
  if (q < 2) throw Error(ErrorCode::InvalidParameter, "q must be >= 2");
  const long Q = q;
  const std::string inputs = "q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
  auto out_of_range = [&]() -> BoundReport {
    throw Error(ErrorCode::NotApplicable, "no closed form for " + inputs);
  };
  Rational v;
  if (k == 1) {
    if (n < 2) return out_of_range();
    if (q == 2 && n % 2 == 0) {
      v = pow_int(2, n - 1) * make_rational(n - 1, n);
    } else {
      v = pow_int(Q, n - 1);
    }
  } else if (k == 2 && q == 2) {
    if (n < 3) return out_of_range();
    const Rational two_n = pow_int(2, n);
    switch (n % 4) {
      case 0: v = two_n * make_rational(n - 2, static_cast<long>(n) * (n + 4)); break;
      case 1: v = two_n * make_rational(n - 3, static_cast<long>(n + 3) * (n - 1)); break;
      case 2: v = two_n / (n + 2); break;
      default: v = two_n / (n + 5); break;
    }
  } else if (k == 2) {
    if (n < 2) return out_of_range();
    const long f = n / Q;
    const Rational num(static_cast<long>(n) * (n + 1) + f * Q * (-2 - 2L * n + Q + f * Q));
    const Rational den(static_cast<long>(n - f) * (n + 1 - f));
    v = pow_int(Q, n - 2) * num / den;
  } else if (k == 3 && q == 2) {
    if (n < 5) return out_of_range();
    const Rational half = pow_int(2, n - 1);
    const long N = n;
    switch (n % 4) {
      case 0: v = half * make_rational(N * N - N + 4, N * N * (N + 4)); break;
      case 1: v = half * make_rational(N - 3, (N - 1) * (N + 3)); break;
      case 2: v = half * make_rational(N - 5, (N + 2) * (N - 2)); break;
      default: v = half / (N + 1); break;
    }
  } else if (k == 3) {
    if (n < 3) return out_of_range();
    const long N = n;
    const long c = -floor_div(-(N - 1), Q);  // ceil((n-1)/q)
    const long f = floor_div(1 - N, Q);
    const Rational num(N * (N + 2 * Q - 1) + Q * c * (-2 * N - Q + Q * c));
    const Rational den(Q * Q * Q * (N + f) * (N + 1 + f));
    v = pow_int(Q, n) * num / den;
  } else {
    return out_of_range();
  }
  return make_report("ratio-closed-phase-rotation", v, k, true, inputs);
}

}  // namespace scb
