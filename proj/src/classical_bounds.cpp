#include "scb/classical_bounds.hpp"

#include <algorithm>
#include <functional>

#include "scb/error.hpp"

namespace scb {

namespace {

std::int64_t checked_pow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw Error(ErrorCode::TooLarge, "power overflows 64 bits");
  }
  return r;
}

void require_distance(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidParameter, "minimum distance must be >= 1");
}

// Calls f on every size-t subset of {0..m-1}, lexicographically; stops when f returns true.
bool any_subset(int m, int t, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  if (t > m) return false;
  while (true) {
    if (f(idx)) return true;
    int i = t - 1;
    while (i >= 0 && idx[i] == m - t + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<Rational> plotkin_city_block(int m, int n, int d) {
  if (m < 3) throw Error(ErrorCode::InvalidParameter, "city block needs m >= 3");
  require_distance(d);
  const long spread = static_cast<long>(n) * (m - 1);
  if (2L * d <= spread) return std::nullopt;
  return make_rational(2L * d, 2L * d - spread);
}

std::int64_t ball_size_city_block(int m, std::span<const int> x, int t) {
  if (t < 0) throw Error(ErrorCode::InvalidParameter, "radius must be >= 0");
  // counts[s] = number of prefixes at total distance s, capped at t.
  std::vector<std::int64_t> counts(t + 1, 0);
  counts[0] = 1;
  for (int xi : x) {
    if (xi < 0 || xi >= m) throw Error(ErrorCode::InvalidElement, "coordinate out of range");
    std::vector<std::int64_t> next(t + 1, 0);
    for (int s = 0; s <= t; ++s) {
      if (counts[s] == 0) continue;
      for (int y = 0; y < m; ++y) {
        const int e = s + std::abs(xi - y);
        if (e <= t) next[e] += counts[s];
      }
    }
    counts = std::move(next);
  }
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::int64_t eta_city_block(int m, int n, int t) {
  if (m < 3) throw Error(ErrorCode::InvalidParameter, "city block needs m >= 3");
  const std::int64_t size = checked_pow(m, n);
  if (size > (1 << 16)) throw Error(ErrorCode::AmbientTooLarge, "more than 2^16 centers");
  std::vector<int> x(n, 0);
  std::int64_t best = INT64_MAX;
  for (std::int64_t idx = 0; idx < size; ++idx) {
    std::int64_t r = idx;
    for (int i = n - 1; i >= 0; --i) {
      x[i] = static_cast<int>(r % m);
      r /= m;
    }
    best = std::min(best, ball_size_city_block(m, x, t));
  }
  return best;
}

Rational hamming_city_block(int m, int n, int d) {
  require_distance(d);
  const int t = (d - 1) / 2;
  const std::int64_t eta = eta_city_block(m, n, t);
  return make_rational(static_cast<long>(checked_pow(m, n)), static_cast<long>(eta));
}

int mu_projective(const ProjectiveParams& params, int t) {
  const MetricSpace space = MetricSpace::projective(params);
  const int m = static_cast<int>(params.subspaces.size());
  const int n = params.n;
  const std::int64_t q = params.field->order();
  if (t >= n) return n;
  for (int size = n; size > t; --size) {
    if (checked_pow(q, size) > (1 << 16)) {
      throw Error(ErrorCode::AmbientTooLarge, "span of " + std::to_string(size) + " subspaces exceeds 2^16");
    }
    const bool found = any_subset(m, size, [&](const std::vector<int>& subset) {
      std::vector<FieldVector> gens;
      for (int i : subset) gens.push_back(params.subspaces[i]);
      if (row_reduce(gens).rank != static_cast<std::size_t>(size)) return false;
      // Walk every combination sum c_i g_i.
      std::vector<std::size_t> span{0};
      for (const auto& g : gens) {
        std::vector<std::size_t> next;
        next.reserve(span.size() * q);
        for (std::size_t x : span) {
          for (std::uint32_t c = 0; c < q; ++c) {
            next.push_back(space.add_index(x, space.index_of(scale(c, g).coords)));
          }
        }
        span = std::move(next);
      }
      return std::all_of(span.begin(), span.end(), [&](std::size_t v) { return space.weight(v) <= t; });
    });
    if (found) return size;
  }
  // Any t members of a spanning family contain t independent ones, and a span
  // of t subspaces has weight at most t.
  return t;
}

std::int64_t singleton_projective(const ProjectiveParams& params, int d) {
  require_distance(d);
  if (d > params.n + 1) throw Error(ErrorCode::InvalidParameter, "d exceeds n + 1");
  return checked_pow(params.field->order(), params.n - mu_projective(params, d - 1));
}

std::int64_t singleton_phase_rotation(std::uint32_t q, int n, int d) {
  require_distance(d);
  const int ceil_term = n - n / static_cast<int>(q);  // ceil(n - n/q)
  if (d < 1 + ceil_term) return checked_pow(q, n - d + 1);
  return 1;
}

std::int64_t singleton_block(const BlockParams& params, int d) {
  require_distance(d);
  int exponent = 0;
  for (std::size_t j = static_cast<std::size_t>(d) - 1; j < params.blocks.size(); ++j) {
    exponent += static_cast<int>(params.blocks[j].size());
  }
  return checked_pow(params.field->order(), exponent);
}

std::int64_t singleton_cyclic_burst(int n, std::uint32_t q, int b, int d) {
  require_distance(d);
  const int exponent = n - b * (d - 1);
  if (exponent < 0) throw Error(ErrorCode::NotApplicable, "n - b(d-1) is negative");
  return checked_pow(q, exponent);
}

Rational varshamov_bound(int n, int d) {
  require_distance(d);
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be >= 1");
  mpz_class denom = 0;
  for (int i = 0; i < d; ++i) {
    mpz_class a, b;
    mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(n / 2), static_cast<unsigned long>(i));
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>((n + 1) / 2), static_cast<unsigned long>(i));
    denom += a + b;
  }
  mpz_class num;
  mpz_ui_pow_ui(num.get_mpz_t(), 2, static_cast<unsigned long>(n) + 1);
  Rational r(num, denom);
  r.canonicalize();
  return r;
}

}  // namespace scb
