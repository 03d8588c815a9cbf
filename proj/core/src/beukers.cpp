#include "zetalab/beukers.hpp"

#include <algorithm>
#include <cmath>

#include "zetalab/errors.hpp"
#include "zetalab/specfun.hpp"
#include "zetalab/tanh_sinh.hpp"

namespace zetalab::beukers {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Real IntPolynomial::operator()(const Real& x) const {
  Real acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

IntPolynomial legendre_poly(int k) {
  if (k < 0) throw DomainError("polynomial degree must be non-negative");
  const auto uk = static_cast<unsigned>(k);
  std::vector<BigInt> c(uk + 1);
  for (unsigned j = 0; j <= uk; ++j) {
    BigInt v = binomial(uk, j) * binomial(uk + j, uk);
    c[j] = j % 2 == 0 ? v : BigInt(-v);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial legendre_poly_misprint(int k) {
  if (k < 0) throw DomainError("polynomial degree must be non-negative");
  const auto uk = static_cast<unsigned>(k);
  if (k == 0) return IntPolynomial({BigInt(0)});  // x^0 (1 - x^0) = 0
  std::vector<BigInt> c(uk + 1, BigInt(0));
  c[0] = 1;
  c[uk] = -binomial(2 * uk, uk);
  return IntPolynomial(std::move(c));
}

ZetaLinearForm cell_integral(int r, int s) {
  if (r < 0 || s < 0) throw DomainError("cell exponents must be non-negative");
  using specfun::harmonic;
  if (r == s) {
    const BigRational h3 = harmonic(static_cast<std::uint64_t>(r), 3).value;
    return ZetaLinearForm::zeta(3, BigRational(2)) - ZetaLinearForm::constant(2 * h3);
  }
  // sum_n 1/((n+r+1)^2 (n+s+1)) + 1/((n+r+1)(n+s+1)^2) telescopes to
  // (H_r^(2) - H_s^(2)) / (r - s).
  const BigRational hr = harmonic(static_cast<std::uint64_t>(r), 2).value;
  const BigRational hs = harmonic(static_cast<std::uint64_t>(s), 2).value;
  return ZetaLinearForm::constant((hr - hs) / BigRational(r - s));
}

ZetaLinearForm weighted_cell_integral(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  ZetaLinearForm total;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      const BigInt w = c[i] * c[j];
      if (w == 0) continue;
      total += cell_integral(static_cast<int>(i), static_cast<int>(j)) * BigRational(w);
    }
  }
  return total;
}

Real LinearFormZ3::magnitude(const PrecisionContext& ctx) const {
  return abs(form_eval(ZetaLinearForm::constant(BigRational(A)) +
                           ZetaLinearForm::zeta(3, BigRational(B)),
                       ctx));
}

ZetaLinearForm beukers_integral(int k) {
  if (k < 1 || k > kMaxLinearFormK) {
    throw DomainError("beukers linear form supports 1 <= k <= " +
                      std::to_string(kMaxLinearFormK));
  }
  return weighted_cell_integral(legendre_poly(k));
}

std::optional<LinearFormZ3> linear_form_for(const IntPolynomial& p, int k) {
  const BigInt d = lcm_seq(std::max(k, 1));
  const BigRational d3(d * d * d);
  const ZetaLinearForm scaled = weighted_cell_integral(p) * d3;
  const BigRational a = scaled.constant_term();
  const BigRational b = scaled.zeta_coeff(3);
  if (denominator_of(a) != 1 || denominator_of(b) != 1) return std::nullopt;
  return LinearFormZ3{numerator_of(a), numerator_of(b), k};
}

LinearFormZ3 beukers_linear_form(int k) {
  (void)beukers_integral(k);  // range check
  auto form = linear_form_for(legendre_poly(k), k);
  if (!form) {
    throw IntegrityError("denominator of I_" + std::to_string(k) + " does not divide d_k^3");
  }
  return *form;
}

BigInt lcm_seq(int k) {
  if (k < 1) throw DomainError("lcm_seq requires k >= 1");
  std::vector<bool> composite(static_cast<std::size_t>(k) + 1, false);
  BigInt out = 1;
  for (int p = 2; p <= k; ++p) {
    if (composite[p]) continue;
    for (long long q = static_cast<long long>(p) * p; q <= k; q += p) composite[q] = true;
    long long pk = p;
    while (pk * p <= k) pk *= p;
    out *= pk;
  }
  return out;
}

std::vector<BigInt> lcm_table(int kmax) {
  if (kmax < 1) throw DomainError("lcm_table requires kmax >= 1");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(kmax));
  BigInt d = 1;
  for (int k = 1; k <= kmax; ++k) {
    d = boost::multiprecision::lcm(d, BigInt(k));
    out.push_back(d);
  }
  return out;
}

Real shrink_sup_exact() { return 17 - 12 * sqrt(Real(2)); }

double shrink_ratio(double x, double y, double z) {
  const double den = 1 - (1 - x * y) * z;
  if (den <= 0) return 0;
  return x * (1 - x) * y * (1 - y) * z * (1 - z) / den;
}

namespace {

// Maximizes g on [lo, hi] by golden section; returns the argmax.
template <class F>
double golden_line(F g, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = g(x1);
  double f2 = g(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = g(x1);
    }
  }
  return (lo + hi) / 2;
}

}  // namespace

Real shrink_sup_check(int grid, const PrecisionContext&) {
  if (grid < 100) throw DomainError("shrink_sup_check needs grid >= 100");
  const double h = 1.0 / grid;
  double best = -1;
  double bx = 0, by = 0, bz = 0;
  for (int i = 0; i < grid; ++i) {
    const double x = (i + 0.5) * h;
    for (int j = 0; j < grid; ++j) {
      const double y = (j + 0.5) * h;
      for (int l = 0; l < grid; ++l) {
        const double z = (l + 0.5) * h;
        const double v = shrink_ratio(x, y, z);
        if (v > best) {
          best = v;
          bx = x;
          by = y;
          bz = z;
        }
      }
    }
  }
  // Local polish: cyclic coordinate line searches inside the best cell's
  // neighbourhood until the value stalls.
  for (int sweep = 0; sweep < 500; ++sweep) {
    const double before = best;
    const double lo = 0.0, hi = 1.0;
    bx = golden_line([&](double t) { return shrink_ratio(t, by, bz); }, std::max(lo, bx - h),
                     std::min(hi, bx + h));
    by = golden_line([&](double t) { return shrink_ratio(bx, t, bz); }, std::max(lo, by - h),
                     std::min(hi, by + h));
    bz = golden_line([&](double t) { return shrink_ratio(bx, by, t); }, std::max(lo, bz - h),
                     std::min(hi, bz + h));
    best = std::max(best, shrink_ratio(bx, by, bz));
    if (best - before < 1e-17) break;
  }
  return Real(best);
}

Real step4_identity_check(const Real& x, const Real& y, const PrecisionContext& ctx) {
  if (x <= 0 || x >= 1 || y <= 0 || y >= 1) throw DomainError("x and y must lie in (0, 1)");
  const Real xy = x * y;
  const Real one_minus_xy = 1 - xy;
  const Real lhs = quad::tanh_sinh(
                       [&](const Real& z, const Real& zc) { return 1 / (zc + xy * z); },
                       ctx.epsilon())
                       .value;
  const Real rhs = -log(xy) / one_minus_xy;
  return abs(lhs - rhs);
}

Real beukers_quadrature_2d(int k, const PrecisionContext& ctx) {
  const IntPolynomial p = legendre_poly(k);
  return quad::iterated_tanh_sinh(
             [&p](std::span<const Real> v, std::span<const Real> vc) {
               const Real kernel = -(quad::log_of(v[0], vc[0]) + quad::log_of(v[1], vc[1])) /
                                   quad::one_minus_product(v, vc);
               return kernel * p(v[0]) * p(v[1]);
             },
             2, ctx.epsilon())
      .value;
}

Real beukers_quadrature_3d(int k, const PrecisionContext& ctx) {
  return quad::iterated_tanh_sinh(
             [k](std::span<const Real> v, std::span<const Real> vc) {
               const Real& x = v[0];
               const Real& y = v[1];
               const Real& z = v[2];
               // 1 - (1 - xy) z = (1 - z) + xyz
               const Real den = vc[2] + x * y * z;
               const Real ratio = x * vc[0] * y * vc[1] * z * vc[2] / den;
               Real value = 1 / den;
               for (int i = 0; i < k; ++i) value *= ratio;
               return value;
             },
             3, ctx.epsilon())
      .value;
}

}  // namespace zetalab::beukers
