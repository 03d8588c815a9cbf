#include "zetalab/tanh_sinh.hpp"

#include <deque>
#include <mutex>
#include <numeric>

#include "zetalab/errors.hpp"

namespace zetalab::quad {

namespace {

// Nodes added at one refinement level, t > 0 only; each t stands for the
// mirrored pair (c, 1 - c). The t = 0 node lives in level 0 as `center`.
struct Level {
  std::vector<Real> small;   // c = 1 / (1 + exp(pi sinh t))
  std::vector<Real> weight;  // h * pi * cosh t * c * (1 - c)
  Real center_weight = 0;    // nonzero only at level 0
};

class NodeTable {
 public:
  const Level& level(unsigned l) {
    std::lock_guard lock(mutex_);
    while (levels_.size() <= l) levels_.push_back(build(static_cast<unsigned>(levels_.size())));
    return levels_[l];
  }

 private:
  static Level build(unsigned l) {
    Level out;
    const Real h = boost::multiprecision::ldexp(Real(1), -static_cast<int>(l));
    const Real cutoff = pow10(-static_cast<int>(kWorkingDigits));
    const Real p = pi();
    if (l == 0) out.center_weight = h * p / 4;
    const std::uint64_t stride = l == 0 ? 1 : 2;
    for (std::uint64_t j = 1;; j += stride) {
      const Real t = h * static_cast<double>(j);
      const Real e = exp(p * sinh(t));
      const Real c = 1 / (1 + e);
      if (c < cutoff) break;
      out.small.push_back(c);
      out.weight.push_back(h * p * cosh(t) * c * (1 - c));
    }
    return out;
  }

  std::mutex mutex_;
  std::deque<Level> levels_;
};

NodeTable& nodes() {
  static NodeTable table;
  return table;
}

const Real& ulp() {
  static const Real value = boost::multiprecision::ldexp(Real(1), -static_cast<int>(
      boost::multiprecision::detail::digits10_2_2(kWorkingDigits)));
  return value;
}

// Weighted sum over the nodes a level adds, skipping negligible weights.
// `count` receives the number of integrand evaluations.
Real level_sum(const Level& lvl, const Integrand1D& f, const Real& weight_floor,
               std::uint64_t& count) {
  Real sum = 0;
  if (lvl.center_weight != 0) {
    const Real half = Real(1) / 2;
    sum += lvl.center_weight * f(half, half);
    ++count;
  }
  const Real one = 1;
  for (std::size_t i = 0; i < lvl.small.size(); ++i) {
    if (lvl.weight[i] < weight_floor) break;
    Real c = lvl.small[i] < ulp() ? ulp() : lvl.small[i];
    Real x = one - c;
    sum += lvl.weight[i] * (f(c, x) + f(x, c));
    count += 2;
  }
  return sum;
}

std::uint64_t nodes_through(unsigned level, const Real& weight_floor) {
  std::uint64_t total = 1;
  for (unsigned l = 0; l <= level; ++l) {
    const auto& lvl = nodes().level(l);
    for (const auto& w : lvl.weight) {
      if (w < weight_floor) break;
      total += 2;
    }
  }
  return total;
}

QuadratureResult run(const Integrand1D& f, const Real& tolerance, const TanhSinhOptions& options,
                     const std::function<void(unsigned)>& before_level) {
  // Integrands here carry at most polylogarithmic endpoint growth.
  const Real weight_floor = tolerance * pow10(-15);
  QuadratureResult result;
  Real previous = 0;
  Real current = 0;
  for (unsigned l = 0; l <= options.max_level; ++l) {
    if (before_level) before_level(l);
    const Level& lvl = nodes().level(l);
    Real added = level_sum(lvl, f, weight_floor, result.evaluations);
    previous = current;
    current = l == 0 ? added : current / 2 + added;
    if (l >= options.min_level && abs(current - previous) <= tolerance) {
      result.value = current;
      result.previous = previous;
      result.level = l;
      return result;
    }
  }
  PrecisionContext ctx(PrecisionContext::kMaxDigits);
  throw ConvergenceError("tanh-sinh did not converge within " +
                             std::to_string(options.max_level) + " levels",
                         to_decimal(current, ctx), to_decimal(previous, ctx));
}

}  // namespace

Real log_of(const Real& x, const Real& complement) {
  if (complement < Real(0.25)) return log1p(-complement);
  return log(x);
}

Real one_minus_product(std::span<const Real> x, std::span<const Real> complement) {
  // 1 - a*b*c = (1-a) + a*((1-b) + b*(1-c))
  Real acc = 0;
  for (std::size_t i = x.size(); i-- > 0;) {
    acc = i + 1 == x.size() ? complement[i] : complement[i] + x[i] * acc;
  }
  return acc;
}

QuadratureResult tanh_sinh(const Integrand1D& f, const Real& tolerance,
                           const TanhSinhOptions& options) {
  if (!(tolerance > 0)) throw DomainError("quadrature tolerance must be positive");
  return run(f, tolerance, options, {});
}

QuadratureResult iterated_tanh_sinh(const IntegrandND& f, std::size_t dimension,
                                    const Real& tolerance,
                                    std::span<const std::size_t> axis_order,
                                    const TanhSinhOptions& options) {
  if (dimension == 0) throw DomainError("dimension must be positive");
  std::vector<std::size_t> order(axis_order.begin(), axis_order.end());
  if (order.empty()) {
    order.resize(dimension);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  if (order.size() != dimension) throw DomainError("axis order must cover every axis");

  std::vector<Real> x(dimension, Real(0.5));
  std::vector<Real> xc(dimension, Real(0.5));
  const Real floor_tol = pow10(-static_cast<int>(kWorkingDigits) + 8);
  std::uint64_t evaluations = 0;

  // depth d integrates axis order[d] with everything outside it fixed.
  std::function<QuadratureResult(std::size_t, const Real&)> integrate_from =
      [&](std::size_t depth, const Real& tol) -> QuadratureResult {
    const std::size_t axis = order[depth];
    if (depth + 1 == dimension) {
      auto r = run(
          [&](const Real& t, const Real& tc) {
            x[axis] = t;
            xc[axis] = tc;
            return f(x, xc);
          },
          tol, options, {});
      evaluations += r.evaluations;
      return r;
    }
    Real inner_tol = tol;
    const Real weight_floor = tol * pow10(-15);
    return run(
        [&](const Real& t, const Real& tc) {
          x[axis] = t;
          xc[axis] = tc;
          return integrate_from(depth + 1, inner_tol).value;
        },
        tol, options,
        [&](unsigned level) {
          inner_tol = tol / (10 * static_cast<double>(nodes_through(level, weight_floor)));
          if (inner_tol < floor_tol) inner_tol = floor_tol;
        });
  };

  QuadratureResult result = integrate_from(0, tolerance);
  result.evaluations = evaluations;
  return result;
}

}  // namespace zetalab::quad
