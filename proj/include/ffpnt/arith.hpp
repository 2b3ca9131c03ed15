#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

// Exact integer / rational primitives shared by the counting formula, the
// expansion engine and the verification suites. Everything here is
// arbitrary-precision and exact; there are no floating-point code paths.

namespace ffpnt {

using Int = mpz_class;
using Rat = mpq_class;

// num/den reduced to lowest terms with positive denominator. Throws
// std::invalid_argument on a zero denominator.
Rat make_rat(Int num, Int den);

Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, unsigned long exp);
Int factorial(unsigned long n);

// floor(sqrt(x)) for x >= 0.
Int floor_sqrt(const Int& x);

// Moebius function mu(n): 0 if n has a squared prime factor, otherwise
// (-1)^(number of prime factors). Trial-division factorization; arguments
// stay at degree scale (a few hundred). Rejects n < 1.
int mobius(std::int64_t n);

// All divisors of n in ascending order. Rejects n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

// Stirling number of the second kind S(n,k), computed bottom-up with a
// process-wide memo table (guarded by a mutex, safe for concurrent use).
Int stirling2(unsigned n, unsigned k);

// Checks t^n == sum_{k=0..n} k! S(n,k) binom(t,k) exactly, with binom(t,k)
// the falling-factorial binomial, valid for negative t as well.
bool stirling2_defining_identity_check(unsigned n, const Int& t);

// Coefficient vector of the polynomial sum_{k=0..j} (-1)^(j-k) k! S(j,k) x^k.
struct StirlingPoly {
    unsigned j = 0;
    std::vector<Int> coeffs;  // coeffs[k], k = 0..j
};

StirlingPoly stirling_poly(unsigned j);

// Exact Horner evaluation of the degree-j Stirling polynomial at x.
Rat eval_stirling_poly(unsigned j, const Rat& x);

// Exact sign test for numbers of the form a + b*sqrt(s) with rational a, b
// and integer s >= 0: true iff the value is >= 0. Comparisons square out the
// single surd, so no irrational arithmetic happens.
bool surd_nonneg(const Rat& a, const Rat& b, const Int& s);

// A rational r with r >= sqrt(x) and r - sqrt(x) <= 1/slack_denominator.
// Exact when x is a perfect square, otherwise (floor(sqrt(x*D^2)) + 1)/D.
// Used wherever an upper bound on an irrational sqrt keeps a verified
// inequality valid. Rejects x < 0 and D < 1.
Rat sqrt_upper_rational(const Int& x, const Int& slack_denominator);

// Truncated decimal rendering of an exact rational with the given number of
// significant digits, scientific notation, deterministic. For display only;
// the exact value is always the num/den form.
std::string decimal_string(const Rat& v, unsigned sig_digits = 20);

}  // namespace ffpnt
