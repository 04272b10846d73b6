#ifndef QXSEP_RATIONAL_HPP
#define QXSEP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qxsep {

// Exact rational scalars. mpq_class keeps the canonical form we rely on:
// positive denominator, coprime numerator/denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n" and "n/d" with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

// "n" when the denominator is 1, "n/d" otherwise.
std::string rational_to_string(const Rational& q);

// Total order used wherever a deterministic arrangement of rationals is
// needed (prime ordering, canonical forms): plain numeric comparison.
inline int rational_cmp(const Rational& a, const Rational& b) { return cmp(a, b); }

}  // namespace qxsep

#endif
