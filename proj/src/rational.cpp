#include "scb/rational.hpp"

#include <cmath>

#include "scb/error.hpp"

namespace scb {

std::int64_t floor_to_int(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (!q.fits_slong_p()) {
    throw Error(ErrorCode::InternalError, "floor does not fit in 64 bits");
  }
  return q.get_si();
}

Rational rationalize(double x, long denominator) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::NumericalInconsistency, "cannot rationalize non-finite value");
  }
  const long double scaled = std::roundl(static_cast<long double>(x) * denominator);
  if (std::fabs(scaled) > 9.0e18L) {
    throw Error(ErrorCode::NumericalInconsistency, "value too large to rationalize");
  }
  const mpz_class num(static_cast<long>(scaled));
  Rational r(num, mpz_class(denominator));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorCode::InvalidParameter, "not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace scb
