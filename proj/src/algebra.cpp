#include "scb/algebra.hpp"

#include <algorithm>

#include "scb/error.hpp"

namespace scb {

namespace {

using Coeffs = std::vector<std::uint32_t>;  // lowest degree first, over GF(p)

Coeffs poly_from_index(std::uint32_t idx, std::uint32_t p, std::uint32_t len) {
  Coeffs c(len, 0);
  for (std::uint32_t j = 0; j < len; ++j) {
    c[j] = idx % p;
    idx /= p;
  }
  return c;
}

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = (a[shift + j] + p * p - lead * b[j] % p) % p;
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t j = 0; j < d; ++j) count *= p;
    for (std::uint32_t idx = 0; idx < count; ++idx) {
      Coeffs g = poly_from_index(idx, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::shared_ptr<const FiniteField> FiniteField::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t j = 0; j < k; ++j) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorCode::InvalidParameter, "field order exceeds 2^16");
  }

  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  f->p_ = p;
  f->k_ = k;
  f->q_ = static_cast<std::uint32_t>(q);

  // Lexicographically smallest monic irreducible, comparing coefficients from
  // x^{k-1} down to x^0.
  bool found = false;
  if (k == 1) {
    f->modulus_ = {0, 1};
    found = true;
  } else {
    for (std::uint32_t idx = 0; idx < q && !found; ++idx) {
      Coeffs cand = poly_from_index(idx, p, k);
      cand.push_back(1);
      if (cand[0] != 0 && is_irreducible(cand, p)) {
        f->modulus_ = cand;
        found = true;
      }
    }
  }
  if (!found) throw Error(ErrorCode::InternalError, "no irreducible polynomial found");

  const std::uint32_t n = f->q_;
  f->add_.resize(static_cast<std::size_t>(n) * n);
  f->mul_.resize(static_cast<std::size_t>(n) * n);
  f->neg_.resize(n);
  f->inv_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    const Coeffs ca = poly_from_index(a, p, k);
    Coeffs na(k);
    for (std::uint32_t j = 0; j < k; ++j) na[j] = (p - ca[j]) % p;
    std::uint32_t nidx = 0;
    for (std::uint32_t j = k; j-- > 0;) nidx = nidx * p + na[j];
    f->neg_[a] = nidx;
    for (std::uint32_t b = 0; b < n; ++b) {
      const Coeffs cb = poly_from_index(b, p, k);
      std::uint32_t sum = 0;
      for (std::uint32_t j = k; j-- > 0;) sum = sum * p + (ca[j] + cb[j]) % p;
      f->add_[static_cast<std::size_t>(a) * n + b] = sum;

      Coeffs prod(2 * k, 0);
      for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      }
      const Coeffs r = poly_mod(prod, f->modulus_, p);
      std::uint32_t ridx = 0;
      for (std::size_t j = r.size(); j-- > 0;) ridx = ridx * p + r[j];
      f->mul_[static_cast<std::size_t>(a) * n + b] = ridx;
      if (ridx == 1) f->inv_[a] = b;
    }
  }
  return f;
}

Element FiniteField::inv(Element a) const {
  if (a == 0 || a >= q_) throw Error(ErrorCode::InvalidElement, "no inverse for element");
  return inv_[a];
}

std::vector<std::uint32_t> FiniteField::digits(Element a) const {
  return poly_from_index(a, p_, k_);
}

FieldPtr field_of_order(std::uint32_t q) {
  if (q < 2) throw Error(ErrorCode::InvalidParameter, "field order must be >= 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error(ErrorCode::InvalidParameter, std::to_string(q) + " is not a prime power");
  return FiniteField::make(p, k);
}

bool FieldVector::is_zero() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](Element e) { return e == 0; });
}

FieldVector FieldVector::zero(FieldPtr field, std::size_t n) {
  return FieldVector{std::move(field), std::vector<Element>(n, 0)};
}

FieldVector FieldVector::ones(FieldPtr field, std::size_t n) {
  return FieldVector{std::move(field), std::vector<Element>(n, 1)};
}

FieldVector FieldVector::unit(FieldPtr field, std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw Error(ErrorCode::InvalidParameter, "unit vector index out of range");
  FieldVector v = zero(std::move(field), n);
  v.coords[i - 1] = 1;
  return v;
}

namespace {

void check_compatible(const FieldVector& a, const FieldVector& b) {
  if (a.field != b.field || a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vectors differ in field or length");
  }
}

}  // namespace

FieldVector operator+(const FieldVector& a, const FieldVector& b) {
  check_compatible(a, b);
  FieldVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = a.field->add(a.coords[i], b.coords[i]);
  return out;
}

FieldVector operator-(const FieldVector& a, const FieldVector& b) {
  check_compatible(a, b);
  FieldVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = a.field->sub(a.coords[i], b.coords[i]);
  return out;
}

FieldVector scale(Element c, const FieldVector& v) {
  FieldVector out = v;
  for (auto& e : out.coords) e = v.field->mul(c, e);
  return out;
}

std::size_t hamming_weight(const FieldVector& v) noexcept {
  return static_cast<std::size_t>(
      std::count_if(v.coords.begin(), v.coords.end(), [](Element e) { return e != 0; }));
}

RowReduction row_reduce(std::span<const FieldVector> rows) {
  RowReduction out;
  if (rows.empty()) return out;
  const FieldPtr& f = rows.front().field;
  const std::size_t n = rows.front().size();
  for (const auto& r : rows) {
    if (r.field != f || r.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "row_reduce: rows differ in field or length");
    }
  }

  std::vector<FieldVector> m(rows.begin(), rows.end());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv].coords[col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    m[rank] = scale(f->inv(m[rank].coords[col]), m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r].coords[col] == 0) continue;
      m[r] = m[r] - scale(m[r].coords[col], m[rank]);
    }
    ++rank;
  }
  m.resize(rank);
  out.rank = rank;
  out.basis = std::move(m);
  return out;
}

bool span_contains(std::span<const FieldVector> generators, const FieldVector& v) {
  if (generators.empty()) return v.is_zero();
  for (const auto& g : generators) check_compatible(g, v);
  const std::size_t base = row_reduce(generators).rank;
  std::vector<FieldVector> extended(generators.begin(), generators.end());
  extended.push_back(v);
  return row_reduce(extended).rank == base;
}

int Polynomial::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational poly_eval(const Polynomial& p, const Rational& x) { return poly_eval(p.coeffs, x); }

double poly_eval(const Polynomial& p, double x) {
  double acc = 0.0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

}  // namespace scb
