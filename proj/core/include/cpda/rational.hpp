#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "cpda/errors.hpp"

namespace cpda {

// All rates, memory ratios and bounds are exact rationals; floating point
// never enters an assertion. Decimal renderings exist only as convenience
// columns in CSV output.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

// Canonical "num/den" rendering, always with an explicit denominator.
std::string rat_to_string(const Rat& r);

// Parses "p/q", "p" or a leading-minus variant thereof.
Rat rat_from_string(const std::string& text);

// Decimal convenience rendering with fixed precision; never used in checks.
std::string rat_to_decimal(const Rat& r, int digits = 6);

// Checked narrowing for JSON emission; rates and loads at desk scale always
// fit, anything else is a defect.
std::int64_t int_to_i64(const Int& value);

}  // namespace cpda
