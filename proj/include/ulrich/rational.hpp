#ifndef ULRICH_RATIONAL_HPP
#define ULRICH_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace ulrich {

// Exact arbitrary-precision arithmetic. Rationals are kept canonical
// (reduced, positive denominator) by the GMP backend, so equality is
// structural and serialization is reproducible.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Ordinary binomial coefficient C(n, k) for n >= 0; zero when k > n.
Integer binomial(const Integer& n, unsigned k);

/// Generalized binomial coefficient: the falling factorial
/// x(x-1)...(x-m+1)/m! at a rational argument. gen_binomial(x, 0) = 1.
Rational gen_binomial(const Rational& x, unsigned m);

bool is_integer(const Rational& q);

/// Exact conversion; throws std::invalid_argument unless q is integral.
Integer to_integer(const Rational& q);

/// "p/q", or just "p" when the denominator is 1; sign on the numerator.
std::string to_string(const Rational& q);

/// Inverse of to_string. Accepts "p" and "p/q"; the result is reduced with
/// positive denominator. Throws std::invalid_argument on malformed input.
Rational rational_from_string(std::string_view s);

}  // namespace ulrich

#endif
