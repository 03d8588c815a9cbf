#pragma once

#include <span>
#include <vector>

#include "zetalab/precision.hpp"

namespace zetalab::antider {

/// A point of the open unit hypercube (0,1)^n.
class HypercubePoint {
 public:
  /// Throws BoundaryError if any coordinate is <= 0 or >= 1, DomainError if
  /// the point is empty.
  explicit HypercubePoint(std::vector<Real> coords);

  std::size_t dimension() const noexcept { return coords_.size(); }
  std::span<const Real> coords() const noexcept { return coords_; }
  const Real& operator[](std::size_t i) const { return coords_[i]; }

 private:
  std::vector<Real> coords_;
};

/// Elementary symmetric polynomials e_0..e_n of the given values.
std::vector<Real> elementary_symmetric(std::span<const Real> values);

/// Antiderivative of (prod log(x_i)/x_i) log(1 - prod x_i) in every variable:
///
///   M_n(x) = sum_{m=0}^{n} (-1)^{n+1-m} e_m(log x_1, ..., log x_n) Li_{2n+1-m}(prod x_i)
///
/// M_n tends to (-1)^{n+1} zeta(2n+1) at the corner (1, ..., 1) and to 0 at
/// the origin.
Real m_n(const HypercubePoint& x, const PrecisionContext& ctx);

/// (prod log(x_i)/x_i) log(1 - prod x_i), the mixed n-th partial of M_n.
Real hypercube_integrand(const HypercubePoint& x);

/// n-fold tensor central difference of M_n,
/// sum_{s in {-1,1}^n} (prod s_i) M_n(x + s h) / (2h)^n.
///
/// Requires n <= 3, every coordinate at least 2*step away from 0 and 1, and
/// ctx.digits() >= 4 |log10 step| + 10.
Real mixed_partial_fd(const HypercubePoint& x, const Real& step, const PrecisionContext& ctx);

/// |mixed_partial_fd - hypercube_integrand|.
Real mixed_partial_residual(const HypercubePoint& x, const Real& step, const PrecisionContext& ctx);

}  // namespace zetalab::antider
