#pragma once

// Adjacency spectra: closed forms, abelian Cayley character sums and a dense
// symmetric eigensolver, grouped into distinct eigenvalues with
// multiplicities.

#include <cstdint>
#include <string>
#include <vector>

#include "scb/algebra.hpp"
#include "scb/graphs.hpp"

namespace scb {

struct Spectrum {
  std::vector<double> values;           // distinct, strictly descending
  std::vector<Rational> exact_values;   // same order; only when exact
  std::vector<std::int64_t> mults;
  bool exact = false;
  double tolerance = 0.0;               // grouping tolerance for float spectra

  std::size_t distinct() const noexcept { return values.size(); }
  std::int64_t order() const noexcept;  // sum of multiplicities
  // Exact value, or the float value rationalized at 1e-12.
  Rational rational(std::size_t i) const;
  // sum m_i theta_i^t; exact for exact spectra, rounded to the nearest
  // integer otherwise (it is the trace of A^t).
  Rational power_sum(int t) const;
  std::string to_json() const;
};

// Builds an exact spectrum from integer eigenvalue counts (any order).
Spectrum exact_spectrum(const std::vector<std::pair<Rational, std::int64_t>>& counts);

// All eigenvalues of a symmetric matrix (row-major), descending.
// Throws NotSymmetric unless a(i,j) == a(j,i) exactly.
std::vector<double> eigs_symmetric(const std::vector<double>& a, std::size_t n);
// Cyclic Jacobi rotations; used by eigs_symmetric for small matrices.
std::vector<double> eigs_jacobi(std::vector<double> a, std::size_t n);

// Consecutive values within tol * max(1, |theta|) are merged; the
// representative is their mean.
Spectrum group_multiplicities(const std::vector<double>& eigs_descending, double tol);

Spectrum graph_spectrum(const Graph& g, double tol = 1e-8);
Spectrum city_block_spectrum(int m, int n);
Spectrum phase_rotation_spectrum(std::uint32_t q, int n);
// Spectrum of the Cayley graph Cay(GF(q)^n, S) via additive characters.
Spectrum cayley_spectrum_abelian(const FieldPtr& field, int n, const std::vector<FieldVector>& connecting_set);

struct SpectrumComparison {
  bool agree = false;
  std::string detail;
};
SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b, double tol = 1e-8);

}  // namespace scb
