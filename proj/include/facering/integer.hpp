#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace facering {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k); zero when k < 0, k > n or n < 0.
Integer binomial(long n, long k);

Integer factorial(unsigned long n);

Integer power(const Integer& base, unsigned long exponent);

/// Renders "(a,b,c)".
std::string to_string(std::span<const Integer> values);
std::string to_string(std::span<const int> values);

}  // namespace facering
