#include "zetalab/quad.hpp"

#include <cmath>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/specfun.hpp"

namespace zetalab::quad {

std::string to_string(Family family) {
  switch (family) {
    case Family::theorem21: return "theorem21";
    case Family::corollary23: return "corollary23";
    case Family::theorem25i: return "theorem25i";
    case Family::theorem25ii: return "theorem25ii";
    case Family::z_km: return "z_km";
    case Family::janous: return "janous";
    case Family::kontsevich: return "kontsevich";
    case Family::beukers_cell: return "beukers_cell";
  }
  return "unknown";
}

IntegralSpec IntegralSpec::theorem21(int n) {
  return IntegralSpec{Family::theorem21, n, 1, 0, 0, 0};
}

IntegralSpec IntegralSpec::corollary23(int n, int r) {
  return IntegralSpec{Family::corollary23, n, r, 0, 0, 0};
}

IntegralSpec IntegralSpec::theorem25(int k, int r) {
  return IntegralSpec{r == 1 ? Family::theorem25i : Family::theorem25ii, 2, r, 2 * k + 1, 1, 0};
}

IntegralSpec IntegralSpec::z_km(int k, int m) {
  return IntegralSpec{Family::z_km, 1, 1, 2 * k + 1, m, 0};
}

IntegralSpec IntegralSpec::janous() { return IntegralSpec{Family::janous, 1, 1, 0, 0, 0}; }

IntegralSpec IntegralSpec::kontsevich(int k) {
  return IntegralSpec{Family::kontsevich, k, 1, 0, 0, 0};
}

IntegralSpec IntegralSpec::beukers_cell(int r, int s) {
  return IntegralSpec{Family::beukers_cell, 2, 1, r, 0, s};
}

void IntegralSpec::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DomainError(what);
  };
  require(dimension >= 1, "dimension must be positive");
  require(power >= 1, "power r must be positive");
  require(monomial_exponent >= 0 && extra_log_power >= 0 && y_exponent >= 0,
          "exponents must be non-negative");
  switch (family) {
    case Family::theorem21:
      require(power == 1 && monomial_exponent == 0 && extra_log_power == 0,
              "theorem21 takes only a dimension");
      break;
    case Family::corollary23:
      require(monomial_exponent == 0 && extra_log_power == 0, "corollary23 takes n and r");
      break;
    case Family::theorem25i:
    case Family::theorem25ii:
      require(dimension == 2, "theorem25 integrals are two-dimensional");
      require(power == (family == Family::theorem25i ? 1 : 2), "theorem25 power mismatch");
      require(monomial_exponent >= 3 && monomial_exponent % 2 == 1,
              "theorem25 weight exponent must be 2k+1 with k >= 1");
      require(extra_log_power == 1, "theorem25 carries one extra log per variable");
      break;
    case Family::z_km:
      require(dimension == 1, "z_km integrals are one-dimensional");
      require(monomial_exponent >= 3 && monomial_exponent % 2 == 1,
              "z_km weight exponent must be 2k+1 with k >= 1");
      require(extra_log_power >= 1, "z_km needs m >= 1");
      break;
    case Family::janous:
      require(dimension == 1, "janous integral is one-dimensional");
      break;
    case Family::kontsevich:
      require(dimension >= 2, "kontsevich integral needs k >= 2");
      break;
    case Family::beukers_cell:
      require(dimension == 2, "beukers cells are two-dimensional");
      break;
  }
}

namespace {

Real hypercube_value(const IntegralSpec& spec, std::span<const Real> x,
                     std::span<const Real> xc) {
  Real weight = 1;
  Real product = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Real l = log_of(x[i], xc[i]);
    Real factor = l;
    for (int p = 0; p < spec.extra_log_power; ++p) factor *= l;
    if (spec.monomial_exponent == 0) {
      factor /= x[i];
    } else {
      for (int p = 1; p < spec.monomial_exponent; ++p) factor *= x[i];
    }
    weight *= factor;
    product *= x[i];
  }
  if (weight == 0) return 0;

  Real pr = product;
  for (int p = 1; p < spec.power; ++p) pr *= product;
  Real log_term;
  if (pr < Real(0.5)) {
    log_term = log1p(-pr);
  } else {
    // 1 - P^r = (1 - P)(1 + P + ... + P^{r-1})
    Real geometric = 1;
    Real pk = 1;
    for (int p = 1; p < spec.power; ++p) {
      pk *= product;
      geometric += pk;
    }
    log_term = log(one_minus_product(x, xc) * geometric);
  }
  return weight * log_term;
}

}  // namespace

Real evaluate_integrand(const IntegralSpec& spec, std::span<const Real> x,
                        std::span<const Real> xc) {
  switch (spec.family) {
    case Family::theorem21:
    case Family::corollary23:
    case Family::theorem25i:
    case Family::theorem25ii:
    case Family::z_km:
      return hypercube_value(spec, x, xc);
    case Family::janous:
      return log_of(x[0], xc[0]) * log_of(xc[0], x[0]) / (x[0] * xc[0]);
    case Family::kontsevich:
      return 1 / one_minus_product(x, xc);
    case Family::beukers_cell: {
      Real value = -(log_of(x[0], xc[0]) + log_of(x[1], xc[1])) / one_minus_product(x, xc);
      for (int p = 0; p < spec.monomial_exponent; ++p) value *= x[0];
      for (int p = 0; p < spec.y_exponent; ++p) value *= x[1];
      return value;
    }
  }
  return 0;
}

namespace {

double evaluate_double(const IntegralSpec& spec, std::span<const double> u) {
  double product = 1;
  double weight = 1;
  for (double x : u) {
    product *= x;
    weight *= std::log(x) / x;
  }
  if (spec.family == Family::kontsevich) return 1.0 / (1.0 - product);
  return weight * std::log1p(-std::pow(product, spec.power));
}

}  // namespace

Real integrate(const IntegralSpec& spec, const PrecisionContext& ctx,
               std::span<const std::size_t> axis_order) {
  spec.validate();
  if (spec.family == Family::kontsevich && spec.dimension <= 3) {
    // innermost axis in closed form: int_0^1 dt / (1 - t P) = -log(1 - P) / P.
    // The integrand is symmetric, so axis_order does not matter here.
    return iterated_tanh_sinh(
               [](std::span<const Real> x, std::span<const Real> xc) {
                 Real product = 1;
                 for (const auto& v : x) product *= v;
                 if (product == 0) return Real(1);
                 if (product < Real(0.5)) return -log1p(-product) / product;
                 return -log(one_minus_product(x, xc)) / product;
               },
               static_cast<std::size_t>(spec.dimension - 1), ctx.epsilon())
        .value;
  }
  if (spec.dimension <= 3) {
    return iterated_tanh_sinh(
               [&spec](std::span<const Real> x, std::span<const Real> xc) {
                 return evaluate_integrand(spec, x, xc);
               },
               static_cast<std::size_t>(spec.dimension), ctx.epsilon(), axis_order)
        .value;
  }
  const bool sampled = spec.family == Family::theorem21 || spec.family == Family::corollary23 ||
                       spec.family == Family::kontsevich;
  if (sampled && spec.dimension <= 5) {
    return Real(monte_carlo_integral(spec, 1'000'000, 0).estimate);
  }
  throw CapabilityError("dimension " + std::to_string(spec.dimension) + " is not supported for " +
                        to_string(spec.family));
}

MonteCarloResult monte_carlo_integral(const IntegralSpec& spec, std::uint64_t samples,
                                      std::uint64_t seed, unsigned workers) {
  spec.validate();
  const bool sampled = spec.family == Family::theorem21 || spec.family == Family::corollary23 ||
                       spec.family == Family::kontsevich;
  if (!sampled) throw CapabilityError("Monte Carlo is not available for " + to_string(spec.family));
  return monte_carlo([&spec](std::span<const double> u) { return evaluate_double(spec, u); },
                     static_cast<std::uint32_t>(spec.dimension), samples, seed, workers);
}

Real tanh_sinh_1d(const Integrand1D& f, const PrecisionContext& ctx) {
  return tanh_sinh(f, ctx.epsilon()).value;
}

namespace {

Real phi_weighted_integral(int n, const PrecisionContext& ctx,
                           const std::function<Real(const Real&)>& log_phi) {
  if (n < 1 || n > 2) throw CapabilityError("phi identity is checked for n in {1, 2}");
  return iterated_tanh_sinh(
             [&](std::span<const Real> x, std::span<const Real> xc) {
               Real weight = 1;
               Real product = 1;
               for (std::size_t i = 0; i < x.size(); ++i) {
                 weight *= log_of(x[i], xc[i]) / x[i];
                 product *= x[i];
               }
               if (weight == 0) return Real(0);
               return weight * log_phi(product);
             },
             static_cast<std::size_t>(n), ctx.epsilon())
      .value;
}

}  // namespace

Real euler_phi_integral(int n, const PrecisionContext& ctx) {
  // log phi at full precision: the quadrature tolerance may be looser.
  const PrecisionContext full(ctx.digits());
  return phi_weighted_integral(
      n, ctx, [&full](const Real& q) { return specfun::log_euler_phi(q, full); });
}

Real euler_phi_truncated_integral(int n, std::uint64_t terms, const PrecisionContext& ctx) {
  return phi_weighted_integral(n, ctx, [terms](const Real& q) {
    Real sum = 0;
    Real qn = 1;
    for (std::uint64_t j = 1; j <= terms; ++j) {
      qn *= q;
      if (qn == 0) break;
      sum += log1p(-qn);
    }
    return sum;
  });
}

Real euler_phi_identity_check(int n, const PrecisionContext& ctx) {
  Real integral = euler_phi_integral(n, ctx);
  if (n % 2 == 0) integral = -integral;
  const Real reference = specfun::zeta(2 * n, ctx) * specfun::zeta(2 * n + 1, ctx);
  return abs(integral - reference);
}

}  // namespace zetalab::quad
