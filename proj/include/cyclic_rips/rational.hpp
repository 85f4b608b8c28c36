#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclic_rips {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Floor of an exact rational (rounds toward minus infinity).
inline Int floor_rat(const Rational& x) {
    Int n = numerator(x);
    Int d = denominator(x); // canonical form keeps d > 0
    Int q = n / d;          // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
}

inline Int ceil_rat(const Rational& x) {
    return -floor_rat(-x);
}

/// Representative of x in [0, 1).
inline Rational mod1(const Rational& x) {
    return x - Rational(floor_rat(x));
}

/// Parses "p/q", a decimal literal ("0.432", ".5", "7"), with optional
/// leading sign. Decimals are read exactly as fractions over powers of ten.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical "p/q" form, denominator always spelled out ("1/3", "0/1").
std::string format_rational(const Rational& x);

} // namespace cyclic_rips
