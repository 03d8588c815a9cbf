#include "zetalab/precision.hpp"

#include <charconv>
#include <cstdlib>
#include <system_error>

#include "zetalab/errors.hpp"

namespace zetalab {

PrecisionContext::PrecisionContext(unsigned digits)
    : digits_(digits), epsilon_(pow10(-static_cast<int>(digits))) {
  if (digits < kMinDigits || digits > kMaxDigits) {
    throw CapabilityError("precision must lie in [" + std::to_string(kMinDigits) + ", " +
                          std::to_string(kMaxDigits) + "] digits, got " + std::to_string(digits));
  }
}

PrecisionContext::PrecisionContext(unsigned digits, const Real& epsilon)
    : PrecisionContext(digits) {
  *this = with_epsilon(epsilon);
}

PrecisionContext PrecisionContext::with_epsilon(const Real& epsilon) const {
  if (!(epsilon > 0)) {
    throw DomainError("tolerance must be positive");
  }
  PrecisionContext out = *this;
  out.epsilon_ = epsilon < epsilon_ ? epsilon_ : epsilon;
  return out;
}

Real pow10(int exponent) {
  Real ten = 10;
  return boost::multiprecision::pow(ten, exponent);
}

Real log1p(const Real& x) {
  Real out;
  mpfr_log1p(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

Real expm1(const Real& x) {
  Real out;
  mpfr_expm1(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

Real pi() {
  static const Real value = [] {
    Real out;
    mpfr_const_pi(out.backend().data(), MPFR_RNDN);
    return out;
  }();
  return value;
}

Real ln2() {
  static const Real value = [] {
    Real out;
    mpfr_const_log2(out.backend().data(), MPFR_RNDN);
    return out;
  }();
  return value;
}

namespace {

// Strip trailing zeros of the mantissa in a scientific-notation string.
std::string trim_mantissa(const std::string& s) {
  auto e = s.find_first_of("eE");
  std::string mantissa = s.substr(0, e);
  std::string exponent = e == std::string::npos ? std::string() : s.substr(e);
  if (mantissa.find('.') != std::string::npos) {
    while (!mantissa.empty() && mantissa.back() == '0') mantissa.pop_back();
    if (!mantissa.empty() && mantissa.back() == '.') mantissa.pop_back();
  }
  if (!exponent.empty()) {
    // e+00 -> drop; e-05 -> e-5
    char sign = exponent.size() > 1 ? exponent[1] : '+';
    std::size_t first = 2;
    while (first < exponent.size() && exponent[first] == '0') ++first;
    std::string digits = exponent.substr(first);
    if (digits.empty()) {
      exponent.clear();
    } else {
      exponent = std::string("e") + (sign == '-' ? "-" : "") + digits;
    }
  }
  return mantissa + exponent;
}

}  // namespace

std::string to_decimal(const Real& x, const PrecisionContext& ctx) {
  if (x == 0) return "0";
  // scientific precision counts digits after the point
  const auto after_point = static_cast<std::streamsize>(ctx.digits() - 1);
  return trim_mantissa(x.str(after_point, std::ios_base::scientific));
}

std::string to_decimal(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

Real parse_real(const std::string& text) { return Real(text); }

}  // namespace zetalab
