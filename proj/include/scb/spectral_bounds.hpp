#pragma once

// Eigenvalue bounds on the k-independence number: the Inertia-type bound and
// its optimal-polynomial MILPs, the Ratio-type bound with its closed forms for
// k = 2, 3 and the minor-polynomial LP, and the phase-rotation closed forms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scb/algebra.hpp"
#include "scb/graphs.hpp"
#include "scb/spectra.hpp"

namespace scb {

struct BoundReport {
  std::string bound_name;
  Rational raw_value = 0;
  std::int64_t floored = 0;
  int k = 0;
  bool exact = true;  // false when derived from a floating spectrum
  std::string inputs;
  std::optional<Polynomial> witness;
  std::vector<std::string> notes;

  std::string to_json() const;
};

BoundReport make_report(std::string name, Rational raw, int k, bool exact, std::string inputs = {});

// Evaluates the Inertia-type bound for a fixed polynomial of degree <= k.
BoundReport inertia_type_bound(const Graph& g, const Spectrum& spectrum, const Polynomial& p, int k);

// Optimal polynomial for the Inertia-type bound over all vertices u.
BoundReport inertia_milp(const Graph& g, const Spectrum& spectrum, int k);
// Same, for k-partially walk-regular graphs; needs only the spectrum.
BoundReport inertia_milp_walkreg(const Spectrum& spectrum, int k);

// n (W - lambda(p)) / (p(theta_0) - lambda(p)) with lambda(p) the minimum of p
// over theta_1..theta_r. Throws AssumptionViolated if p(theta_0) <= lambda(p).
BoundReport ratio_type_bound(const Spectrum& spectrum, const Polynomial& p, const Rational& w_max, int k);
// Computes W from the diagonal of p(A); throws NotRegular for irregular graphs.
BoundReport ratio_type_bound(const Graph& g, const Spectrum& spectrum, const Polynomial& p, int k);

BoundReport ratio_alpha2_closed(const Spectrum& spectrum);
BoundReport ratio_alpha3_closed(const Spectrum& spectrum, std::int64_t delta);

// Best Ratio-type bound via the divided-difference LP. For k >= r every
// polynomial constraint disappears and the optimum is m_0.
BoundReport minor_polynomial_lp(const Spectrum& spectrum, int k);

// Closed forms for the phase-rotation graph, k in {1, 2, 3}; NotApplicable
// outside each formula's range.
BoundReport phase_rotation_closed_bound(std::uint32_t q, int n, int k);

}  // namespace scb
