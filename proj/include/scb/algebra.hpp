#pragma once

// Exact arithmetic over GF(p^k), vectors over it, and rational polynomials.
//
// Field elements are indices into precomputed operation tables. Index i
// encodes the polynomial sum_j c_j x^j over GF(p) with i = sum_j c_j p^j, so
// 0 and 1 sit at indices 0 and 1 and the additive group is (Z/p)^k digit-wise.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "scb/rational.hpp"

namespace scb {

using Element = std::uint32_t;

class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  // Throws InvalidPrime when p is not prime, InvalidParameter when p^k is out
  // of range.
  static std::shared_ptr<const FiniteField> make(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }

  // Monic, lowest degree first; size k+1.
  const std::vector<std::uint32_t>& reduction_polynomial() const noexcept { return modulus_; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  // Throws InvalidElement for a == 0.
  Element inv(Element a) const;

  // Base-p digits of an element, lowest degree first (length k).
  std::vector<std::uint32_t> digits(Element a) const;

 private:
  FiniteField() = default;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

bool is_prime(std::uint32_t n) noexcept;

// Convenience wrapper matching the usual make_field(p, k) spelling.
inline FieldPtr make_field(std::uint32_t p, std::uint32_t k) { return FiniteField::make(p, k); }

// q must be a prime power; returns GF(q).
FieldPtr field_of_order(std::uint32_t q);

struct FieldVector {
  FieldPtr field;
  std::vector<Element> coords;

  std::size_t size() const noexcept { return coords.size(); }
  bool is_zero() const noexcept;

  static FieldVector zero(FieldPtr field, std::size_t n);
  static FieldVector ones(FieldPtr field, std::size_t n);
  // Standard basis vector e_i, 1-indexed as in the usual notation.
  static FieldVector unit(FieldPtr field, std::size_t n, std::size_t i);

  friend bool operator==(const FieldVector& a, const FieldVector& b) {
    return a.field == b.field && a.coords == b.coords;
  }
};

FieldVector operator+(const FieldVector& a, const FieldVector& b);
FieldVector operator-(const FieldVector& a, const FieldVector& b);
FieldVector scale(Element c, const FieldVector& v);
std::size_t hamming_weight(const FieldVector& v) noexcept;

struct RowReduction {
  std::size_t rank = 0;
  std::vector<FieldVector> basis;  // reduced row-echelon form, pivots ascending
};

// Gauss-Jordan elimination. Throws DimensionMismatch on mixed fields/lengths.
RowReduction row_reduce(std::span<const FieldVector> rows);

// True iff v is a GF(q)-combination of the generators (rank test).
bool span_contains(std::span<const FieldVector> generators, const FieldVector& v);

// Polynomial with exact rational coefficients a_0 .. a_k.
struct Polynomial {
  std::vector<Rational> coeffs;

  // Degree of the highest nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
};

template <typename T>
T poly_eval(const std::vector<T>& coeffs, const T& x) {
  T acc = T(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational poly_eval(const Polynomial& p, const Rational& x);
double poly_eval(const Polynomial& p, double x);

}  // namespace scb
