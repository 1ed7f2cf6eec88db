#pragma once

// Exact number types shared by every module. Counts are arbitrary-precision
// integers and all geometry is done over the rationals.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace affinefloer {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// num/den for machine integers of either sign. Throws std::domain_error
/// when den is zero. Prefer this to the two-argument Rational constructor,
/// which misreads negative 64-bit denominators.
Rational ratio(std::int64_t num, std::int64_t den);

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are printed without a denominator.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// True when the rational has denominator 1.
bool is_integral(const Rational& value);

/// Floor division for signed 64-bit operands (b != 0).
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// binom(n, k), zero outside 0 <= k <= n.
Integer binomial(std::int64_t n, std::int64_t k);

/// Narrowing conversion that throws std::overflow_error when the value does
/// not fit.
std::int64_t to_int64(const Integer& value);

inline int sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace affinefloer
