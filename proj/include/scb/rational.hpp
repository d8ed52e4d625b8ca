#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace scb {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Floor of an exact rational as a machine integer.
std::int64_t floor_to_int(const Rational& x);

// Nearest rational with denominator `denominator` (default 10^12).
Rational rationalize(double x, long denominator = 1'000'000'000'000L);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);

// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace scb
