#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace fcone {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// "p/q" with q >= 1; integers carry an explicit "/1".
std::string to_pq_string(const Rational& r);

/// Shortest human form: "p" for integers, "p/q" otherwise.
std::string to_display_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace fcone
