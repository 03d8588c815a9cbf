#include "zetalab/rational.hpp"

namespace zetalab {

Real to_real(const BigRational& q) {
  Real out;
  mpfr_set_q(out.backend().data(), q.backend().data(), MPFR_RNDN);
  return out;
}

Real to_real(const BigInt& z) {
  Real out;
  mpfr_set_z(out.backend().data(), z.backend().data(), MPFR_RNDN);
  return out;
}

BigRational inverse_power(const BigInt& base, unsigned exponent) {
  BigInt p = boost::multiprecision::pow(base, exponent);
  return BigRational(BigInt(1), p);
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.backend().data(), n, k);
  return out;
}

std::string to_string(const BigRational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

}  // namespace zetalab
