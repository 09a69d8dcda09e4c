#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "toricmld/errors.hpp"

namespace toricmld {

// Arbitrary-precision integers and rationals are used on every computation
// path; the library never touches floating point. Rationals are kept reduced
// with positive denominator, so equality is structural.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den, reduced, denominator made positive. Throws InputError on den == 0.
Rational make_rational(Int num, Int den);

/// Largest integer <= q.
Int floor_rational(const Rational& q);

/// Smallest integer >= q.
Int ceil_rational(const Rational& q);

/// Floor of a/b for b > 0.
Int floor_div(const Int& a, const Int& b);

/// Ceiling of a/b for b > 0.
Int ceil_div(const Int& a, const Int& b);

/// "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Strict parser for "p" or "p/q": decimal integers, optional leading '-',
/// no whitespace, no decimal points. q must be positive.
Rational parse_rational(std::string_view text);

/// Strict decimal integer parser (optional leading '-').
Int parse_int(std::string_view text);

}  // namespace toricmld
