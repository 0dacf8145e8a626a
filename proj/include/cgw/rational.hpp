#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cgw {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// The exact binary value of a finite double.
Rational exact_rational(double v);

double to_double(const Rational& r);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Smallest double d found by upward stepping with d*d >= x (exactly), x >= 0.
double sqrt_upper(const Rational& x);

}  // namespace cgw
