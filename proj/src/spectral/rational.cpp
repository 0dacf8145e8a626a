#include "cgw/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cgw {

Rational exact_rational(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("cannot convert a non-finite double to a rational");
  if (v == 0.0) return Rational(0);
  int exp = 0;
  const double frac = std::frexp(v, &exp);  // v = frac * 2^exp, 0.5 <= |frac| < 1
  const auto mantissa = static_cast<std::int64_t>(std::ldexp(frac, 53));
  exp -= 53;
  Rational r(mantissa);
  if (exp > 0) r *= Rational(BigInt(1) << exp);
  if (exp < 0) r /= Rational(BigInt(1) << -exp);
  return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double sqrt_upper(const Rational& x) {
  if (x < 0) throw std::domain_error("square root of a negative rational");
  double d = std::sqrt(to_double(x));
  while (d > 0 && exact_rational(d) * exact_rational(d) >= x) {
    const double down = std::nextafter(d, 0.0);
    if (exact_rational(down) * exact_rational(down) < x) break;
    d = down;
  }
  while (exact_rational(d) * exact_rational(d) < x) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

}  // namespace cgw
