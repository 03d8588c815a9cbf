#pragma once

#include <map>
#include <string>

#include "zetalab/precision.hpp"
#include "zetalab/rational.hpp"

namespace zetalab {

/// Exact linear combination  c + sum_m q_m * zeta(m) + q_L * log(2)
/// with rational coefficients and zeta orders m >= 2.
///
/// Zero coefficients are never stored, so structural equality is value
/// equality.
class ZetaLinearForm {
 public:
  ZetaLinearForm() = default;

  static ZetaLinearForm constant(BigRational value);
  /// Throws DomainError for order < 2.
  static ZetaLinearForm zeta(int order, BigRational coeff = BigRational(1));
  static ZetaLinearForm log2(BigRational coeff = BigRational(1));

  const BigRational& constant_term() const noexcept { return constant_; }
  const std::map<int, BigRational>& zeta_terms() const noexcept { return zeta_; }
  const BigRational& log2_coeff() const noexcept { return log2_; }

  /// Coefficient of zeta(order); zero when absent.
  BigRational zeta_coeff(int order) const;
  bool is_rational() const noexcept { return zeta_.empty() && log2_ == 0; }

  ZetaLinearForm& operator+=(const ZetaLinearForm& other);
  ZetaLinearForm& operator-=(const ZetaLinearForm& other);
  ZetaLinearForm& operator*=(const BigRational& scale);

  friend ZetaLinearForm operator+(ZetaLinearForm a, const ZetaLinearForm& b) { return a += b; }
  friend ZetaLinearForm operator-(ZetaLinearForm a, const ZetaLinearForm& b) { return a -= b; }
  friend ZetaLinearForm operator*(ZetaLinearForm a, const BigRational& s) { return a *= s; }
  friend ZetaLinearForm operator*(const BigRational& s, ZetaLinearForm a) { return a *= s; }
  friend ZetaLinearForm operator-(ZetaLinearForm a) { return a *= BigRational(-1); }
  friend bool operator==(const ZetaLinearForm&, const ZetaLinearForm&) = default;

  /// Drops zero coefficients. Idempotent; every mutating operation already
  /// leaves the form normalized.
  void normalize();

 private:
  BigRational constant_{0};
  std::map<int, BigRational> zeta_;
  BigRational log2_{0};
};

ZetaLinearForm form_add(const ZetaLinearForm& a, const ZetaLinearForm& b);

/// Numeric value to within ctx.epsilon().
Real form_eval(const ZetaLinearForm& form, const PrecisionContext& ctx);

/// Human-readable rendering, e.g. "1 + 7*zeta(3) + 4*zeta(5) - 1/2*log(2)".
std::string to_string(const ZetaLinearForm& form);

}  // namespace zetalab
