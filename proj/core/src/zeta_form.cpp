#include "zetalab/zeta_form.hpp"

#include <algorithm>
#include <cmath>

#include <mpfr.h>

#include "zetalab/errors.hpp"
#include "zetalab/specfun.hpp"

namespace zetalab {

ZetaLinearForm ZetaLinearForm::constant(BigRational value) {
  ZetaLinearForm f;
  f.constant_ = std::move(value);
  return f;
}

ZetaLinearForm ZetaLinearForm::zeta(int order, BigRational coeff) {
  if (order < 2) {
    throw DomainError("zeta order must be >= 2, got " + std::to_string(order));
  }
  ZetaLinearForm f;
  if (coeff != 0) f.zeta_.emplace(order, std::move(coeff));
  return f;
}

ZetaLinearForm ZetaLinearForm::log2(BigRational coeff) {
  ZetaLinearForm f;
  f.log2_ = std::move(coeff);
  return f;
}

BigRational ZetaLinearForm::zeta_coeff(int order) const {
  auto it = zeta_.find(order);
  return it == zeta_.end() ? BigRational(0) : it->second;
}

ZetaLinearForm& ZetaLinearForm::operator+=(const ZetaLinearForm& other) {
  constant_ += other.constant_;
  log2_ += other.log2_;
  for (const auto& [order, coeff] : other.zeta_) zeta_[order] += coeff;
  normalize();
  return *this;
}

ZetaLinearForm& ZetaLinearForm::operator-=(const ZetaLinearForm& other) {
  constant_ -= other.constant_;
  log2_ -= other.log2_;
  for (const auto& [order, coeff] : other.zeta_) zeta_[order] -= coeff;
  normalize();
  return *this;
}

ZetaLinearForm& ZetaLinearForm::operator*=(const BigRational& scale) {
  constant_ *= scale;
  log2_ *= scale;
  for (auto& [order, coeff] : zeta_) coeff *= scale;
  normalize();
  return *this;
}

void ZetaLinearForm::normalize() {
  std::erase_if(zeta_, [](const auto& kv) { return kv.second == 0; });
}

ZetaLinearForm form_add(const ZetaLinearForm& a, const ZetaLinearForm& b) { return a + b; }

namespace {

constexpr long kMaxEvalDigits = 20'000;

class MpfrValue {
 public:
  explicit MpfrValue(long digits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219281)));
    mpfr_set_zero(v_, 1);
  }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Decimal digits cancelled between the largest term and the sum.
long cancelled_digits(const Real& largest, const Real& sum) {
  if (largest == 0) return 0;
  if (sum == 0) return kMaxEvalDigits;
  return std::max(0L, static_cast<long>(std::ceil(static_cast<double>(log10(largest / abs(sum))))));
}

// Evaluation at `digits` decimal digits straight through MPFR.
Real eval_wide(const ZetaLinearForm& form, long digits, Real& largest) {
  MpfrValue sum(digits), term(digits), constant(digits);
  largest = 0;
  auto accumulate = [&] {
    Real t;
    mpfr_set(t.backend().data(), term.get(), MPFR_RNDN);
    largest = std::max(largest, abs(t));
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  };
  mpfr_set_q(term.get(), form.constant_term().backend().data(), MPFR_RNDN);
  accumulate();
  for (const auto& [order, coeff] : form.zeta_terms()) {
    mpfr_zeta_ui(constant.get(), static_cast<unsigned long>(order), MPFR_RNDN);
    mpfr_mul_q(term.get(), constant.get(), coeff.backend().data(), MPFR_RNDN);
    accumulate();
  }
  if (form.log2_coeff() != 0) {
    mpfr_const_log2(constant.get(), MPFR_RNDN);
    mpfr_mul_q(term.get(), constant.get(), form.log2_coeff().backend().data(), MPFR_RNDN);
    accumulate();
  }
  Real out;
  mpfr_set(out.backend().data(), sum.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Real form_eval(const ZetaLinearForm& form, const PrecisionContext& ctx) {
  Real sum = to_real(form.constant_term());
  Real largest = abs(sum);
  for (const auto& [order, coeff] : form.zeta_terms()) {
    if (order < 2) throw DomainError("zeta(1) diverges");
    const Real term = to_real(coeff) * specfun::zeta(order, ctx);
    largest = std::max(largest, abs(term));
    sum += term;
  }
  if (form.log2_coeff() != 0) {
    const Real term = to_real(form.log2_coeff()) * ln2();
    largest = std::max(largest, abs(term));
    sum += term;
  }
  // Large coefficients can cancel past the working precision; redo the sum
  // wide enough that ctx.digits() survive.
  const long headroom = static_cast<long>(kWorkingDigits) - static_cast<long>(ctx.working_digits());
  long lost = cancelled_digits(largest, sum);
  long digits = static_cast<long>(ctx.working_digits());
  while (lost > headroom && digits < kMaxEvalDigits) {
    digits = std::min(kMaxEvalDigits, digits + lost + static_cast<long>(kGuardDigits));
    Real wide_largest;
    sum = eval_wide(form, digits, wide_largest);
    const long now_lost = cancelled_digits(wide_largest, sum);
    if (now_lost + static_cast<long>(ctx.working_digits()) <= digits) break;
    lost = now_lost;
  }
  return sum;
}

namespace {

void append_term(std::string& out, const BigRational& coeff, const std::string& symbol) {
  if (coeff == 0) return;
  BigRational magnitude = coeff < 0 ? BigRational(-coeff) : coeff;
  if (out.empty()) {
    if (coeff < 0) out += "-";
  } else {
    out += coeff < 0 ? " - " : " + ";
  }
  if (symbol.empty()) {
    out += to_string(magnitude);
  } else if (magnitude == 1) {
    out += symbol;
  } else {
    out += to_string(magnitude) + "*" + symbol;
  }
}

}  // namespace

std::string to_string(const ZetaLinearForm& form) {
  std::string out;
  append_term(out, form.constant_term(), "");
  for (const auto& [order, coeff] : form.zeta_terms()) {
    append_term(out, coeff, "zeta(" + std::to_string(order) + ")");
  }
  append_term(out, form.log2_coeff(), "log(2)");
  return out.empty() ? "0" : out;
}

}  // namespace zetalab
