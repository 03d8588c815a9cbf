#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

namespace zetalab {

/// Decimal digits carried by every Real. Contexts may ask for at most
/// kWorkingDigits - kGuardDigits digits.
inline constexpr unsigned kWorkingDigits = 60;
inline constexpr unsigned kGuardDigits = 10;

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kWorkingDigits>,
    boost::multiprecision::et_off>;

/// Working precision and target absolute tolerance.
///
/// `digits` is the decimal precision a caller wants results at; arithmetic
/// runs with at least `digits + kGuardDigits` digits. The default tolerance
/// is 10^-digits. A looser tolerance may be requested for expensive
/// computations (e.g. three-dimensional quadrature).
class PrecisionContext {
 public:
  static constexpr unsigned kMinDigits = 15;
  static constexpr unsigned kMaxDigits = kWorkingDigits - kGuardDigits;
  static constexpr unsigned kDefaultDigits = 30;

  PrecisionContext() : PrecisionContext(kDefaultDigits) {}
  explicit PrecisionContext(unsigned digits);
  PrecisionContext(unsigned digits, const Real& epsilon);

  unsigned digits() const noexcept { return digits_; }
  unsigned working_digits() const noexcept { return digits_ + kGuardDigits; }
  const Real& epsilon() const noexcept { return epsilon_; }

  /// Same digits, different tolerance. The tolerance may not be tighter
  /// than 10^-digits.
  PrecisionContext with_epsilon(const Real& epsilon) const;

 private:
  unsigned digits_;
  Real epsilon_;
};

Real pow10(int exponent);

// MPFR entry points that Boost.Multiprecision does not wrap.
Real log1p(const Real& x);
Real expm1(const Real& x);
Real pi();
Real ln2();

/// Shortest decimal string that denotes `x` rounded to `ctx.digits()`
/// significant digits (trailing zeros in the mantissa are dropped).
std::string to_decimal(const Real& x, const PrecisionContext& ctx);
std::string to_decimal(double x);

Real parse_real(const std::string& text);

}  // namespace zetalab
