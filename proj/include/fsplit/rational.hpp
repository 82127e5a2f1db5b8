#ifndef FSPLIT_RATIONAL_HPP
#define FSPLIT_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fsplit
{

// Arbitrary precision rational, always kept canonical (reduced, positive
// denominator, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

// "a/b", or "a" when b = 1.
std::string to_string(const Rational &q);

// Accepts "a", "-a", "a/b". Throws Error(ParseError) on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace fsplit

#endif
