#pragma once

#include <gmpxx.h>

#include <string>

namespace breakgeo {

using BigInt = mpz_class;
using Rational = mpq_class;

/// C(n, r); zero when r < 0 or r > n.
BigInt binomial(long n, long r);
BigInt factorial(long n);

/// Always "p/q", including integers ("2/1").
std::string rational_string(const Rational& q);
double to_double(const Rational& q);

}  // namespace breakgeo
