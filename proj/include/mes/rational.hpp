#pragma once

#include <gmpxx.h>
#include <string>

namespace mes {

// Exact arbitrary-precision rationals, always kept in lowest terms with a
// positive denominator.  gmp keeps the invariant as long as every value is
// built through ratio() or arithmetic on already-canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational ratio(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational ratio(const Integer& num, const Integer& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Integer factorial(unsigned long n);

// binomial(n, k) with the usual convention that out-of-range k gives 0.
// n must be nonnegative.
Integer binomial(long n, long k);

Integer int_pow(const Integer& base, unsigned long exp);

std::string to_string(const Rational& r);

} // namespace mes
