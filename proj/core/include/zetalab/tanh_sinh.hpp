#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "zetalab/precision.hpp"

namespace zetalab::quad {

/// Integrand on (0,1). Receives the abscissa and its exact distance to 1,
/// so factors like log(1-x) stay accurate next to the right endpoint.
using Integrand1D = std::function<Real(const Real& x, const Real& complement)>;

/// Integrand on (0,1)^n with per-coordinate complements.
using IntegrandND =
    std::function<Real(std::span<const Real> x, std::span<const Real> complement)>;

struct TanhSinhOptions {
  unsigned max_level = 12;
  unsigned min_level = 3;
};

struct QuadratureResult {
  Real value;
  Real previous;  // estimate one level coarser
  unsigned level = 0;
  std::uint64_t evaluations = 0;
};

/// Tanh-sinh quadrature on (0,1) with step halving.
///
/// Level L uses step 2^-L; refinement stops at the first level >= min_level
/// whose estimate differs from the previous one by at most `tolerance`.
/// Nodes never reach 0 or 1; coordinates are clamped to [ulp, 1 - ulp].
/// Throws ConvergenceError after max_level.
QuadratureResult tanh_sinh(const Integrand1D& f, const Real& tolerance,
                           const TanhSinhOptions& options = {});

/// Iterated tanh-sinh over (0,1)^n. `axis_order` lists axes from outermost
/// to innermost (identity when empty). Each inner integral runs with
/// tolerance tol / (10 * outer nodes so far).
QuadratureResult iterated_tanh_sinh(const IntegrandND& f, std::size_t dimension,
                                    const Real& tolerance,
                                    std::span<const std::size_t> axis_order = {},
                                    const TanhSinhOptions& options = {});

/// log(x) computed from whichever of x, 1-x is better conditioned.
Real log_of(const Real& x, const Real& complement);

/// 1 - prod x_i, evaluated from the complements without cancellation.
Real one_minus_product(std::span<const Real> x, std::span<const Real> complement);

}  // namespace zetalab::quad
