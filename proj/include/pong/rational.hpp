#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace pong {

using Rational = boost::rational<std::int64_t>;

// "p/q" with q > 0, always including the denominator ("2/1").
std::string to_fraction_string(const Rational& r);
// Accepts "p/q" or "p"; throws InvalidArgument otherwise.
Rational parse_fraction(const std::string& text);

}  // namespace pong
