#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "zetalab/precision.hpp"

namespace zetalab {

using BigInt = boost::multiprecision::mpz_int;

/// Exact fraction, always stored in lowest terms with a positive
/// denominator (GMP canonical form).
using BigRational = boost::multiprecision::mpq_rational;

inline BigInt numerator_of(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const BigRational& q) { return boost::multiprecision::denominator(q); }

Real to_real(const BigRational& q);
Real to_real(const BigInt& z);

/// 1 / base^exponent, exactly.
BigRational inverse_power(const BigInt& base, unsigned exponent);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// "p/q" or "p" when the denominator is one.
std::string to_string(const BigRational& q);

}  // namespace zetalab
