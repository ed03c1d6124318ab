#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace aritygap {

// Exact arithmetic throughout; classification decisions are equality tests
// and would not survive rounding. boost::rational keeps values reduced with
// a positive denominator.
using Rational = boost::rational<std::int64_t>;

// Accepts "p" or "p/q" with an optional leading sign on p.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.denominator() == 1; }

}  // namespace aritygap
