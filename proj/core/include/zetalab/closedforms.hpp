#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "zetalab/precision.hpp"
#include "zetalab/rational.hpp"
#include "zetalab/zeta_form.hpp"

namespace zetalab::closedforms {

inline constexpr std::uint64_t kOracleTerms = 1'000'000;

/// Partial sum of a positive-term (or sign-definite) series and a rigorous
/// bound on the omitted tail.
struct SeriesOracle {
  Real value;
  Real tail_bound;
  std::uint64_t terms = 0;
};

/// -sum_{u>=1} 4 / (u (2k+1+u)^6): the double integral of
/// (log x)^2 (log y)^2 (xy)^{2k} log(1 - xy) over the unit square.
SeriesOracle oracle_i(int k, const PrecisionContext& ctx, std::uint64_t terms = kOracleTerms);

/// -sum_{u>=1} 4 / (u (2k+1+2u)^6): same integrand with log(1 - (xy)^2).
SeriesOracle oracle_ii(int k, const PrecisionContext& ctx, std::uint64_t terms = kOracleTerms);

/// -sum_{u>=1} (m+1)! / (u (u+2k+1)^{m+2}).
SeriesOracle oracle_z(int k, int m, const PrecisionContext& ctx,
                      std::uint64_t terms = kOracleTerms);

/// Exact value of oracle_i(k) as a zeta linear form:
///   sum_{j=2}^{6} 4 zeta(j) / a^{7-j} - 4 H_a / a^6 - 4 sum_{j=2}^{6} H_a^{(j)} / a^{7-j},
/// a = 2k+1, from 1/(u (u+a)^6) = 1/(a^6 u) - sum_{j=1}^{6} 1/(a^{7-j} (u+a)^j).
ZetaLinearForm closed_form_i(int k);

/// Exact value of oracle_ii(k):
///   sum_{j=2}^{6} 8 (1 - 2^-j) zeta(j) / a^{7-j} + 8 log 2 / a^6
///     - 8 sum_{j=1}^{6} O_k^{(j)} / a^{7-j},
/// with O_k^{(j)} = sum_{i=0}^{k} 1/(2i+1)^j.
ZetaLinearForm closed_form_ii(int k);

struct ZClosedForm {
  ZetaLinearForm form;
  /// s_{k,m} / t_{k,m} = (m+1)! sum_{j=1}^{m+2} H_a^{(j)} / a^{m+3-j} > 0.
  BigRational s_over_t;
};

/// oracle_z(k, m) = sum_{j=0}^{m} (m+1)! zeta(m+2-j) / a^{j+1} - s/t.
///
/// The one-dimensional integral of (log x)^{m+1} x^{2k} log(1-x) equals
/// z_integral_sign(m) times this value.
ZClosedForm z_closed_form(int k, int m);

/// (-1)^{m+1}: sign relating the Z integral to its series.
int z_integral_sign(int m);

/// a_k/b_k with a^2 I_k = 4 zeta(5) - a_k/b_k.
BigRational fraction_ab(int k);
/// c_k/d_k with 4 a^2 J_k = 31 zeta(5) - c_k/d_k.
BigRational fraction_cd(int k);

/// I_k: closed_form_i minus its zeta(6), zeta(4), zeta(3), zeta(2) terms.
ZetaLinearForm i_k_form(int k);
/// J_k: closed_form_ii minus its zeta(6), zeta(4), zeta(3), zeta(2), log 2 terms.
ZetaLinearForm j_k_form(int k);
/// Z_{k,m} = (m+1)! zeta(m+2) / a - s/t.
ZetaLinearForm z_km_form(int k, int m);

enum class SequenceFamily { I_k, J_k, Z_km, bound_i, bound_j, bound_z };
std::string to_string(SequenceFamily family);

/// One row of a sequence table.
///
/// For I_k / J_k / Z_km rows `numeric` is the closed form's value and
/// `oracle` the same quantity assembled from the series oracle. For bound
/// rows `numeric` is the right-hand side of the bound, `oracle` the
/// left-hand side it must exceed, and `closed` holds the zeta-linear part of
/// the right-hand side (the Z bound also has a m^m e^-m term).
struct SequenceRecord {
  SequenceFamily family;
  int k = 0;
  int m = 0;
  ZetaLinearForm closed;
  Real numeric;
  Real oracle;
  Real residual;
};

SequenceRecord sequence_record(SequenceFamily family, int k, int m, const PrecisionContext& ctx,
                               std::uint64_t oracle_terms = kOracleTerms);

struct Extremum {
  Real argmax;
  Real value;
};

/// sup over (0,1) of |log x|^m x^{2k+1}: attained at e^{-m/(2k+1)} with
/// value (m / ((2k+1) e))^m.
Extremum sup_log_power(int k, int m, const PrecisionContext& ctx);

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
Extremum golden_section_max(const std::function<Real(const Real&)>& f, Real lo, Real hi,
                            const PrecisionContext& ctx);

enum class BoundFamily { I, J, Z };

struct BoundValue {
  Real value;
  /// Z family only: whether the value dropped relative to k-1 (absent for k = 1).
  std::optional<bool> decreased;
};

/// Right-hand side of the bound for |4 zeta(5) - a_k/b_k| (I),
/// |31 zeta(5) - c_k/d_k| (J), or |(m+1)! zeta(m+2) - (2k+1) s/t| (Z).
BoundValue bound_rhs(BoundFamily family, int k, int m, const PrecisionContext& ctx);

/// The bounded quantity itself (left-hand side).
Real bound_lhs(BoundFamily family, int k, int m, const PrecisionContext& ctx);

/// Zeta-linear part of bound_rhs.
ZetaLinearForm bound_rhs_form(BoundFamily family, int k, int m);

/// t_{k,m} * bound_rhs(Z, k, m): the bound after clearing the denominator
/// of s/t.
Real t_scaled_bound(int k, int m, const PrecisionContext& ctx);

}  // namespace zetalab::closedforms
