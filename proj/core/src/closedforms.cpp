#include "zetalab/closedforms.hpp"

#include <cmath>

#include "zetalab/errors.hpp"
#include "zetalab/specfun.hpp"

namespace zetalab::closedforms {

namespace {

using specfun::harmonic;
using specfun::Parity;

void require_k(int k) {
  if (k < 1) throw DomainError("k must be >= 1");
}

void require_km(int k, int m) {
  require_k(k);
  if (m < 1) throw DomainError("m must be >= 1 (m = 0 would pull in zeta(1) terms)");
}

BigRational inv_pow(int base, int exponent) {
  return inverse_power(BigInt(base), static_cast<unsigned>(exponent));
}

BigRational h_all(int upper, int order) {
  return harmonic(static_cast<std::uint64_t>(upper), static_cast<unsigned>(order)).value;
}

BigRational h_odd(int upper, int order) {
  return harmonic(static_cast<std::uint64_t>(upper), static_cast<unsigned>(order), Parity::odd_only)
      .value;
}

Real power(const Real& base, int e) {
  Real out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// sum_{u=N..1} coeff / (u (shift + step*u)^p), summed smallest-first.
Real reciprocal_series(const Real& coeff, int shift, int step, int p, std::uint64_t terms) {
  Real sum = 0;
  for (std::uint64_t u = terms; u >= 1; --u) {
    const Real ur = static_cast<double>(u);
    const Real base = shift + step * ur;
    sum += 1 / (ur * power(base, p));
  }
  return coeff * sum;
}

// (correct harmonic correction of closed_form_i) = 4 H_a / a^6 + 4 sum_{j=2}^{6} H_a^{(j)} / a^{7-j}
BigRational correction_i(int k) {
  const int a = 2 * k + 1;
  BigRational c = 4 * h_all(a, 1) * inv_pow(a, 6);
  for (int j = 2; j <= 6; ++j) c += 4 * h_all(a, j) * inv_pow(a, 7 - j);
  return c;
}

// 8 sum_{j=1}^{6} O_k^{(j)} / a^{7-j}
BigRational correction_ii(int k) {
  const int a = 2 * k + 1;
  BigRational c = 0;
  for (int j = 1; j <= 6; ++j) c += 8 * h_odd(k, j) * inv_pow(a, 7 - j);
  return c;
}

BigRational odd_factor(int j) { return 1 - inv_pow(2, j); }

}  // namespace

SeriesOracle oracle_i(int k, const PrecisionContext&, std::uint64_t terms) {
  require_k(k);
  const int a = 2 * k + 1;
  SeriesOracle out;
  out.terms = terms;
  out.value = reciprocal_series(Real(-4), a, 1, 6, terms);
  // 1/(u (u+a)^6) < u^-7 and sum_{u>N} u^-7 < 1/(6 N^6)
  const Real n = static_cast<double>(terms);
  out.tail_bound = Real(4) / (6 * power(n, 6));
  return out;
}

SeriesOracle oracle_ii(int k, const PrecisionContext&, std::uint64_t terms) {
  require_k(k);
  const int a = 2 * k + 1;
  SeriesOracle out;
  out.terms = terms;
  out.value = reciprocal_series(Real(-4), a, 2, 6, terms);
  const Real n = static_cast<double>(terms);
  out.tail_bound = Real(4) / (64 * 6 * power(n, 6));
  return out;
}

SeriesOracle oracle_z(int k, int m, const PrecisionContext&, std::uint64_t terms) {
  require_km(k, m);
  const int a = 2 * k + 1;
  const Real fact = to_real(factorial(static_cast<unsigned>(m + 1)));
  SeriesOracle out;
  out.terms = terms;
  out.value = reciprocal_series(-fact, a, 1, m + 2, terms);
  const Real n = static_cast<double>(terms);
  out.tail_bound = fact / ((m + 2) * power(n, m + 2));
  return out;
}

ZetaLinearForm closed_form_i(int k) {
  require_k(k);
  const int a = 2 * k + 1;
  ZetaLinearForm f;
  for (int j = 2; j <= 6; ++j) f += ZetaLinearForm::zeta(j, 4 * inv_pow(a, 7 - j));
  f -= ZetaLinearForm::constant(correction_i(k));
  return f;
}

ZetaLinearForm closed_form_ii(int k) {
  require_k(k);
  const int a = 2 * k + 1;
  ZetaLinearForm f;
  for (int j = 2; j <= 6; ++j) f += ZetaLinearForm::zeta(j, 8 * odd_factor(j) * inv_pow(a, 7 - j));
  f += ZetaLinearForm::log2(8 * inv_pow(a, 6));
  f -= ZetaLinearForm::constant(correction_ii(k));
  return f;
}

ZClosedForm z_closed_form(int k, int m) {
  require_km(k, m);
  const int a = 2 * k + 1;
  const BigRational fact(factorial(static_cast<unsigned>(m + 1)));
  ZClosedForm out;
  for (int j = 0; j <= m; ++j) {
    out.form += ZetaLinearForm::zeta(m + 2 - j, fact * inv_pow(a, j + 1));
  }
  BigRational st = 0;
  for (int j = 1; j <= m + 2; ++j) st += h_all(a, j) * inv_pow(a, m + 3 - j);
  out.s_over_t = fact * st;
  out.form -= ZetaLinearForm::constant(out.s_over_t);
  return out;
}

int z_integral_sign(int m) { return m % 2 == 1 ? 1 : -1; }

BigRational fraction_ab(int k) {
  require_k(k);
  const int a = 2 * k + 1;
  return BigRational(a * a) * correction_i(k);
}

BigRational fraction_cd(int k) {
  require_k(k);
  const int a = 2 * k + 1;
  return BigRational(4 * a * a) * correction_ii(k);
}

ZetaLinearForm i_k_form(int k) {
  ZetaLinearForm f = closed_form_i(k);
  for (int j : {6, 4, 3, 2}) f -= ZetaLinearForm::zeta(j, f.zeta_coeff(j));
  return f;
}

ZetaLinearForm j_k_form(int k) {
  ZetaLinearForm f = closed_form_ii(k);
  for (int j : {6, 4, 3, 2}) f -= ZetaLinearForm::zeta(j, f.zeta_coeff(j));
  f -= ZetaLinearForm::log2(f.log2_coeff());
  return f;
}

ZetaLinearForm z_km_form(int k, int m) {
  ZetaLinearForm f = z_closed_form(k, m).form;
  for (int j = 2; j < m + 2; ++j) f -= ZetaLinearForm::zeta(j, f.zeta_coeff(j));
  return f;
}

std::string to_string(SequenceFamily family) {
  switch (family) {
    case SequenceFamily::I_k: return "I_k";
    case SequenceFamily::J_k: return "J_k";
    case SequenceFamily::Z_km: return "Z_km";
    case SequenceFamily::bound_i: return "bound_i";
    case SequenceFamily::bound_j: return "bound_j";
    case SequenceFamily::bound_z: return "bound_z";
  }
  return "unknown";
}

SequenceRecord sequence_record(SequenceFamily family, int k, int m, const PrecisionContext& ctx,
                               std::uint64_t oracle_terms) {
  SequenceRecord rec{family, k, m, {}, 0, 0, 0};
  switch (family) {
    case SequenceFamily::I_k: {
      rec.m = 0;
      rec.closed = i_k_form(k);
      const ZetaLinearForm dropped = closed_form_i(k) - rec.closed;
      rec.oracle = oracle_i(k, ctx, oracle_terms).value - form_eval(dropped, ctx);
      break;
    }
    case SequenceFamily::J_k: {
      rec.m = 0;
      rec.closed = j_k_form(k);
      const ZetaLinearForm dropped = closed_form_ii(k) - rec.closed;
      rec.oracle = oracle_ii(k, ctx, oracle_terms).value - form_eval(dropped, ctx);
      break;
    }
    case SequenceFamily::Z_km: {
      rec.closed = z_km_form(k, m);
      const ZetaLinearForm dropped = z_closed_form(k, m).form - rec.closed;
      rec.oracle = oracle_z(k, m, ctx, oracle_terms).value - form_eval(dropped, ctx);
      break;
    }
    case SequenceFamily::bound_i:
    case SequenceFamily::bound_j:
    case SequenceFamily::bound_z: {
      const BoundFamily bf = family == SequenceFamily::bound_i   ? BoundFamily::I
                             : family == SequenceFamily::bound_j ? BoundFamily::J
                                                                 : BoundFamily::Z;
      if (bf != BoundFamily::Z) rec.m = 0;
      rec.closed = bound_rhs_form(bf, k, rec.m);
      rec.numeric = bound_rhs(bf, k, rec.m, ctx).value;
      rec.oracle = bound_lhs(bf, k, rec.m, ctx);
      rec.residual = abs(rec.numeric - rec.oracle);
      return rec;
    }
  }
  rec.numeric = form_eval(rec.closed, ctx);
  rec.residual = abs(rec.numeric - rec.oracle);
  return rec;
}

Extremum sup_log_power(int k, int m, const PrecisionContext&) {
  require_km(k, m);
  const Real a = 2 * k + 1;
  const Real ratio = Real(m) / a;
  Extremum out;
  out.argmax = exp(-ratio);
  out.value = power(ratio / exp(Real(1)), m);
  return out;
}

Extremum golden_section_max(const std::function<Real(const Real&)>& f, Real lo, Real hi,
                            const PrecisionContext& ctx) {
  const Real inv_phi = (sqrt(Real(5)) - 1) / 2;
  Real x1 = hi - inv_phi * (hi - lo);
  Real x2 = lo + inv_phi * (hi - lo);
  Real f1 = f(x1);
  Real f2 = f(x2);
  const Real tolerance = ctx.epsilon();
  for (int iter = 0; iter < 400 && hi - lo > tolerance; ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  Extremum out;
  out.argmax = (lo + hi) / 2;
  out.value = f(out.argmax);
  return out;
}

ZetaLinearForm bound_rhs_form(BoundFamily family, int k, int m) {
  require_k(k);
  const int a = 2 * k + 1;
  ZetaLinearForm f;
  switch (family) {
    case BoundFamily::I:
      f += ZetaLinearForm::zeta(5);
      f += ZetaLinearForm::zeta(6, BigRational(4 * a));
      f += ZetaLinearForm::zeta(4, 4 * inv_pow(a, 1));
      f += ZetaLinearForm::zeta(3, 4 * inv_pow(a, 2));
      f += ZetaLinearForm::zeta(2, 4 * inv_pow(a, 3));
      break;
    case BoundFamily::J:
      f += ZetaLinearForm::zeta(5, BigRational(4));
      f += ZetaLinearForm::zeta(6, BigRational(63 * a, 2));
      f += ZetaLinearForm::zeta(4, 30 * inv_pow(a, 1));
      f += ZetaLinearForm::zeta(3, 28 * inv_pow(a, 2));
      f += ZetaLinearForm::zeta(2, 24 * inv_pow(a, 3));
      f += ZetaLinearForm::log2(32 * inv_pow(a, 4));
      break;
    case BoundFamily::Z: {
      require_km(k, m);
      const BigRational fact(factorial(static_cast<unsigned>(m + 1)));
      for (int j = 1; j <= m; ++j) f += ZetaLinearForm::zeta(m + 2 - j, fact * inv_pow(a, j));
      break;
    }
  }
  return f;
}

namespace {

Real z_bound_value(int k, int m, const PrecisionContext& ctx) {
  const int a = 2 * k + 1;
  const Real mr = m;
  // m^m zeta(3) / (a^{m-1} e^m)
  const Real lead = power(mr, m) * specfun::zeta(3, ctx) / (power(Real(a), m - 1) * exp(mr));
  return lead + form_eval(bound_rhs_form(BoundFamily::Z, k, m), ctx);
}

}  // namespace

BoundValue bound_rhs(BoundFamily family, int k, int m, const PrecisionContext& ctx) {
  BoundValue out;
  if (family != BoundFamily::Z) {
    out.value = form_eval(bound_rhs_form(family, k, m), ctx);
    return out;
  }
  require_km(k, m);
  out.value = z_bound_value(k, m, ctx);
  if (k > 1) out.decreased = out.value < z_bound_value(k - 1, m, ctx);
  return out;
}

Real bound_lhs(BoundFamily family, int k, int m, const PrecisionContext& ctx) {
  switch (family) {
    case BoundFamily::I:
      return abs(4 * specfun::zeta(5, ctx) - to_real(fraction_ab(k)));
    case BoundFamily::J:
      return abs(31 * specfun::zeta(5, ctx) - to_real(fraction_cd(k)));
    case BoundFamily::Z: {
      require_km(k, m);
      const BigRational scaled = BigRational(2 * k + 1) * z_closed_form(k, m).s_over_t;
      return abs(to_real(factorial(static_cast<unsigned>(m + 1))) * specfun::zeta(m + 2, ctx) -
                 to_real(scaled));
    }
  }
  return 0;
}

Real t_scaled_bound(int k, int m, const PrecisionContext& ctx) {
  const BigInt t = denominator_of(z_closed_form(k, m).s_over_t);
  return to_real(t) * z_bound_value(k, m, ctx);
}

}  // namespace zetalab::closedforms
