#pragma once

#include <optional>
#include <vector>

#include "zetalab/precision.hpp"
#include "zetalab/rational.hpp"
#include "zetalab/zeta_form.hpp"

namespace zetalab::beukers {

/// Integer polynomial, coeffs[i] multiplies x^i. No trailing zero
/// coefficients (the zero polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Real operator()(const Real& x) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Shifted Legendre polynomial (1/k!) d^k/dx^k [x^k (1-x)^k]
///   = sum_j (-1)^j C(k, j) C(k+j, k) x^j.
IntPolynomial legendre_poly(int k);

/// (1/k!) d^k/dx^k [x^k (1 - x^k)] = 1 - C(2k, k) x^k, the literal reading of
/// a common misprint. Kept for comparison only.
IntPolynomial legendre_poly_misprint(int k);

/// Exact value of the double integral of -log(xy)/(1-xy) x^r y^s over the
/// unit square:
///   r == s:  2 (zeta(3) - H_r^{(3)})
///   r != s:  (H_r^{(2)} - H_s^{(2)}) / (r - s)
ZetaLinearForm cell_integral(int r, int s);

/// Double integral of -log(xy)/(1-xy) p(x) p(y), expanded over cells.
ZetaLinearForm weighted_cell_integral(const IntPolynomial& p);

/// I_k d_k^3 = A + B zeta(3) with A, B integers.
struct LinearFormZ3 {
  BigInt A;
  BigInt B;
  int k = 0;

  /// |A + B zeta(3)|
  Real magnitude(const PrecisionContext& ctx) const;
};

inline constexpr int kMaxLinearFormK = 30;

/// Exact I_k = integral of -log(xy)/(1-xy) P_k(x) P_k(y) as a zeta form.
ZetaLinearForm beukers_integral(int k);

/// Clears the denominators of I_k by d_k^3. Throws IntegrityError if any
/// denominator fails to divide d_k^3, DomainError outside 1 <= k <= 30.
LinearFormZ3 beukers_linear_form(int k);

/// Same construction for an arbitrary polynomial weight; returns nullopt
/// instead of throwing when d_k^3 does not clear the denominators.
std::optional<LinearFormZ3> linear_form_for(const IntPolynomial& p, int k);

/// lcm(1, ..., k) as a product of maximal prime powers.
BigInt lcm_seq(int k);

/// d_1 .. d_kmax.
std::vector<BigInt> lcm_table(int kmax);

/// (sqrt 2 - 1)^4 = 17 - 12 sqrt 2.
Real shrink_sup_exact();

/// x(1-x) y(1-y) z(1-z) / (1 - (1-xy) z).
double shrink_ratio(double x, double y, double z);

/// Maximum of shrink_ratio over [0,1]^3: best point of a grid^3 lattice of
/// cell midpoints, polished by cyclic golden-section line searches.
/// Requires grid >= 100.
Real shrink_sup_check(int grid, const PrecisionContext& ctx);

/// |tanh-sinh of int_0^1 dz / (1 - (1-xy) z)  -  (-log(xy) / (1-xy))|.
Real step4_identity_check(const Real& x, const Real& y, const PrecisionContext& ctx);

/// I_k by two-dimensional quadrature of the P_k-weighted cell integrand.
Real beukers_quadrature_2d(int k, const PrecisionContext& ctx);

/// I_k by three-dimensional quadrature of
/// (x(1-x) y(1-y) z(1-z) / (1 - (1-xy) z))^k / (1 - (1-xy) z).
Real beukers_quadrature_3d(int k, const PrecisionContext& ctx);

}  // namespace zetalab::beukers
