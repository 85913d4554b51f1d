#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace comptonqcd {

/// Exact fraction used for charges, slope coefficients and the coupling.
using Rational = boost::rational<std::int64_t>;

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p/q" or "p" with optional sign; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& q) {
    return boost::rational_cast<double>(q);
}

}  // namespace comptonqcd
