#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace atq {

// Exact scalars. Rational is always in lowest terms with positive
// denominator; GMP canonicalizes on construction from a num/den pair.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Floor and ceiling division for b > 0. mpz division truncates toward zero,
// which is wrong for negative operands.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

Integer rat_floor(const Rational& r);
Integer rat_ceil(const Rational& r);

bool is_integral(const Rational& r);

/**
 * Parses "num" or "num/den" with an optional leading minus sign.
 * The denominator must be positive. Throws DomainError("invalid_rational")
 * on anything else. The result is canonicalized, so "2/4" parses to 1/2.
 */
Rational parse_rational(const std::string& text);

// Canonical form: "n" when integral, otherwise "num/den" in lowest terms
// with the sign on the numerator.
std::string format_rational(const Rational& r);

}  // namespace atq
