#pragma once

// Comparison bounds from classical coding theory: Plotkin- and Hamming-type
// for the city block metric, Singleton-type for the field metrics and
// Varshamov's bound for the asymmetric metric.

#include <cstdint>
#include <optional>
#include <span>

#include "scb/metrics.hpp"
#include "scb/rational.hpp"

namespace scb {

// 2d / (2d - n(m-1)) when d > n(m-1)/2, otherwise nullopt.
std::optional<Rational> plotkin_city_block(int m, int n, int d);

// |B_t(x)| in [[m-1]]^n.
std::int64_t ball_size_city_block(int m, std::span<const int> x, int t);
// Minimum ball size over all centers.
std::int64_t eta_city_block(int m, int n, int t);
// m^n / eta_t with t = floor((d-1)/2). Throws AmbientTooLarge beyond 2^16 centers.
Rational hamming_city_block(int m, int n, int d);

// Largest |G| over independent subfamilies G of F whose span has weight <= t.
int mu_projective(const ProjectiveParams& params, int t);
// q^(n - mu(d-1)).
std::int64_t singleton_projective(const ProjectiveParams& params, int d);
// q^(n-d+1) if d < 1 + ceil(n - n/q), otherwise 1.
std::int64_t singleton_phase_rotation(std::uint32_t q, int n, int d);
// q^(|p_d| + ... + |p_m|) for blocks sorted by descending size.
std::int64_t singleton_block(const BlockParams& params, int d);
// q^(n - b(d-1)); NotApplicable when the exponent is negative.
std::int64_t singleton_cyclic_burst(int n, std::uint32_t q, int b, int d);

Rational varshamov_bound(int n, int d);

}  // namespace scb
