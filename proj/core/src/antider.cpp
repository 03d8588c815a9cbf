#include "zetalab/antider.hpp"

#include <cmath>

#include "zetalab/errors.hpp"
#include "zetalab/specfun.hpp"

namespace zetalab::antider {

HypercubePoint::HypercubePoint(std::vector<Real> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("hypercube point needs at least one coordinate");
  for (const auto& c : coords_) {
    if (c <= 0 || c >= 1) throw BoundaryError("coordinate outside the open unit interval");
  }
}

std::vector<Real> elementary_symmetric(std::span<const Real> values) {
  std::vector<Real> e(values.size() + 1, Real(0));
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t m = i + 1; m >= 1; --m) e[m] += e[m - 1] * values[i];
  }
  return e;
}

Real m_n(const HypercubePoint& x, const PrecisionContext& ctx) {
  const int n = static_cast<int>(x.dimension());
  std::vector<Real> logs;
  logs.reserve(x.dimension());
  Real product = 1;
  for (const auto& c : x.coords()) {
    logs.push_back(log(c));
    product *= c;
  }
  const auto e = elementary_symmetric(logs);

  Real sum = 0;
  for (int m = 0; m <= n; ++m) {
    if (e[m] == 0) continue;
    Real term = e[m] * specfun::polylog(2 * n + 1 - m, product, ctx);
    if ((n + 1 - m) % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

Real hypercube_integrand(const HypercubePoint& x) {
  Real weight = 1;
  Real product = 1;
  for (const auto& c : x.coords()) {
    weight *= log(c) / c;
    product *= c;
  }
  return weight * log1p(-product);
}

Real mixed_partial_fd(const HypercubePoint& x, const Real& step, const PrecisionContext& ctx) {
  const std::size_t n = x.dimension();
  if (n > 3) throw CapabilityError("finite-difference check supports n <= 3");
  if (!(step > 0)) throw DomainError("step must be positive");
  for (const auto& c : x.coords()) {
    if (c < 2 * step || c > 1 - 2 * step) {
      throw DomainError("point closer than 2*step to the hypercube boundary");
    }
  }
  const double step_digits = std::fabs(std::log10(step.convert_to<double>()));
  if (ctx.digits() < 4 * step_digits + 10) {
    throw DomainError("precision too low for the requested finite-difference step");
  }

  Real sum = 0;
  std::vector<Real> shifted(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const bool plus = (mask >> i) & 1u;
      shifted[i] = plus ? x[i] + step : x[i] - step;
      if (!plus) sign = -sign;
    }
    Real value = m_n(HypercubePoint(shifted), ctx);
    if (sign > 0) sum += value;
    else sum -= value;
  }
  return sum / boost::multiprecision::pow(2 * step, static_cast<int>(n));
}

Real mixed_partial_residual(const HypercubePoint& x, const Real& step, const PrecisionContext& ctx) {
  return abs(mixed_partial_fd(x, step, ctx) - hypercube_integrand(x));
}

}  // namespace zetalab::antider
