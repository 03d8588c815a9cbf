#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "zetalab/precision.hpp"
#include "zetalab/tanh_sinh.hpp"

namespace zetalab::quad {

enum class Family {
  theorem21,    // prod(log x_i / x_i) log(1 - prod x_i)
  corollary23,  // prod(log x_i / x_i) log(1 - (prod x_i)^r)
  theorem25i,   // n=2, extra log power 1, weight (xy)^{2k+1}, r=1
  theorem25ii,  // same with r=2
  z_km,         // n=1: (log x / x) log(1-x) (log x)^m x^{2k+1}
  janous,       // log x log(1-x) / (x (1-x))
  kontsevich,   // 1 / (1 - prod x_i) over [0,1]^k
  beukers_cell  // -log(xy) / (1-xy) x^r y^s
};

std::string to_string(Family family);

/// One integrand from the catalogue above.
///
/// The hypercube families share the shape
///   prod_i (log x_i)^{1+m} x_i^{e-1} * log(1 - (prod_i x_i)^r)
/// with m = extra_log_power and e = monomial_exponent. For beukers_cell the
/// exponents are monomial_exponent (x) and y_exponent (y).
struct IntegralSpec {
  Family family = Family::theorem21;
  int dimension = 1;
  int power = 1;
  int monomial_exponent = 0;
  int extra_log_power = 0;
  int y_exponent = 0;

  static IntegralSpec theorem21(int n);
  static IntegralSpec corollary23(int n, int r);
  static IntegralSpec theorem25(int k, int r);
  static IntegralSpec z_km(int k, int m);
  static IntegralSpec janous();
  static IntegralSpec kontsevich(int k);
  static IntegralSpec beukers_cell(int r, int s);

  /// Throws DomainError when the fields contradict the family.
  void validate() const;
};

/// Integrand of `spec` at a point, given coordinates and complements.
Real evaluate_integrand(const IntegralSpec& spec, std::span<const Real> x,
                        std::span<const Real> complement);

/// Signed value of the integral (no (-1)^{n+1} prefactor applied).
///
/// Dimensions up to 3 use iterated tanh-sinh to ctx.epsilon(). Dimensions 4
/// and 5 of the theorem21/corollary23/kontsevich families fall back to
/// seeded Monte Carlo with 10^6 samples; anything larger throws
/// CapabilityError. `axis_order` chooses the Fubini order (outermost first).
Real integrate(const IntegralSpec& spec, const PrecisionContext& ctx,
               std::span<const std::size_t> axis_order = {});

/// Tanh-sinh on (0,1) to ctx.epsilon().
Real tanh_sinh_1d(const Integrand1D& f, const PrecisionContext& ctx);

struct MonteCarloResult {
  double estimate = 0;
  double standard_error = 0;
  std::uint64_t samples = 0;
};

/// Counter-based uniform deviate in (0,1) for sample `index`, coordinate
/// `coord`. Pure function of its arguments.
double uniform_deviate(std::uint64_t seed, std::uint64_t index, std::uint32_t coord,
                       std::uint32_t dimension);

/// Plain Monte Carlo over [0,1]^dimension. Samples are split into fixed
/// blocks whose partial sums are combined in block order, so the result is
/// bit-identical for any worker count (0 = hardware concurrency).
MonteCarloResult monte_carlo(const std::function<double(std::span<const double>)>& f,
                             std::uint32_t dimension, std::uint64_t samples, std::uint64_t seed,
                             unsigned workers = 1);

/// Seeded Monte Carlo estimate of a theorem21, corollary23 or kontsevich
/// integral, evaluated in double precision.
MonteCarloResult monte_carlo_integral(const IntegralSpec& spec, std::uint64_t samples,
                                      std::uint64_t seed, unsigned workers = 1);

/// Mean of 1 / (1 - prod u_i) over uniform points of [0,1]^k with its
/// standard error. Requires k >= 2 and samples >= 10^4.
MonteCarloResult monte_carlo_kontsevich(int k, std::uint64_t samples, std::uint64_t seed,
                                        const PrecisionContext& ctx, unsigned workers = 1);

/// Integral of prod(log x_i / x_i) log phi(prod x_i) over [0,1]^n.
Real euler_phi_integral(int n, const PrecisionContext& ctx);

/// Same integral with phi replaced by its first `terms` factors.
Real euler_phi_truncated_integral(int n, std::uint64_t terms, const PrecisionContext& ctx);

/// |(-1)^{n+1} euler_phi_integral(n) - zeta(2n) zeta(2n+1)| for n in {1, 2}.
Real euler_phi_identity_check(int n, const PrecisionContext& ctx);

}  // namespace zetalab::quad
