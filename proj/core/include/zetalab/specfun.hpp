#pragma once

#include <cstdint>

#include "zetalab/precision.hpp"
#include "zetalab/rational.hpp"

namespace zetalab::specfun {

/// Exact Bernoulli number B_n (B_1 = -1/2). Values up to B_20 are cached.
BigRational bernoulli(unsigned n);

/// Li_s(z) = sum_{k>=1} z^k / k^s for integer s >= 1 and 0 <= z <= 1.
///
/// Direct summation; stops once the geometric tail bound
/// z^{N+1} / ((1-z) (N+1)^s) drops below the tolerance. At z = 1 the call is
/// forwarded to zeta(s). Throws DomainError for z outside [0, 1] or
/// s = 1, z = 1.
Real polylog(int s, const Real& z, const PrecisionContext& ctx);

/// Riemann zeta at an integer s >= 2.
///
/// Even s uses the Bernoulli closed form (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!).
/// Odd s sums N = max(10^4, digits^2) terms and adds the Euler-Maclaurin
/// tail through B_20. Results are memoized per (s, N).
Real zeta(int s, const PrecisionContext& ctx);

enum class Parity { all, odd_only };

struct HarmonicSum {
  std::uint64_t upper;
  unsigned order;
  Parity parity;
  BigRational value;
};

/// Exact generalized harmonic sum.
///   all:      sum_{i=1}^{upper} 1 / i^order
///   odd_only: sum_{i=0}^{upper} 1 / (2i+1)^order
HarmonicSum harmonic(std::uint64_t upper, unsigned order, Parity parity = Parity::all);

/// sum_{u>=1} 1/(2u+1)^m = (1 - 2^-m) zeta(m) - 1.
Real odd_zeta_reduction(int m, const PrecisionContext& ctx);

/// Euler's function phi(q) = prod_{n>=1} (1 - q^n), truncated adaptively so
/// that the neglected factor satisfies |log tail| <= epsilon. Requires
/// 0 <= q < 1.
Real euler_phi_partial(const Real& q, const PrecisionContext& ctx);

/// prod_{n=1}^{terms} (1 - q^n).
Real euler_phi_truncated(const Real& q, std::uint64_t terms);

/// log phi(q) for 0 <= q < 1, accurate up to q -> 1.
///
/// For q <= 1/2 the logarithms of the product factors are summed; above
/// that the eta modular relation
///   phi(e^-t) = sqrt(2 pi / t) exp(t/24 - pi^2/(6t)) phi(e^{-4 pi^2 / t})
/// maps q to a tiny argument first.
Real log_euler_phi(const Real& q, const PrecisionContext& ctx);

}  // namespace zetalab::specfun
