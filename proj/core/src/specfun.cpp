#include "zetalab/specfun.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <utility>

#include "zetalab/errors.hpp"

namespace zetalab::specfun {

namespace {

constexpr unsigned kCachedBernoulli = 20;
constexpr std::uint64_t kMaxProductTerms = 50'000'000;
constexpr std::uint64_t kMaxPolylogTerms = 200'000'000;

BigRational bernoulli_uncached(unsigned n, const std::vector<BigRational>& lower) {
  // sum_{j=0}^{n} C(n+1, j) B_j = 0
  BigRational acc = 0;
  for (unsigned j = 0; j < n; ++j) acc += BigRational(binomial(n + 1, j)) * lower[j];
  return -acc / BigRational(BigInt(n + 1));
}

std::vector<BigRational> bernoulli_table(unsigned upto) {
  std::vector<BigRational> b;
  b.reserve(upto + 1);
  b.emplace_back(1);
  for (unsigned n = 1; n <= upto; ++n) b.push_back(bernoulli_uncached(n, b));
  return b;
}

const std::vector<BigRational>& cached_bernoulli() {
  static const std::vector<BigRational> table = bernoulli_table(kCachedBernoulli);
  return table;
}

// k^s for small positive integers, exact in Real as long as it fits.
Real int_power(std::uint64_t k, int s) {
  Real base = static_cast<double>(k);
  Real out = base;
  for (int i = 1; i < s; ++i) out *= base;
  return out;
}

Real odd_zeta_euler_maclaurin(int s, std::uint64_t n_terms) {
  const auto& b = cached_bernoulli();
  Real sum = 0;
  for (std::uint64_t k = n_terms - 1; k >= 1; --k) sum += 1 / int_power(k, s);

  const Real n = static_cast<double>(n_terms);
  const Real n_pow_s = int_power(n_terms, s);
  sum += n / (n_pow_s * (s - 1));
  sum += 1 / (2 * n_pow_s);

  // sum_j B_{2j}/(2j)! * s (s+1) ... (s+2j-2) * N^{-s-2j+1}
  Real rising = s;            // s (s+1) ... (s+2j-2)
  Real n_power = n_pow_s * n; // N^{s+2j-1}
  Real fact = 2;              // (2j)!
  for (unsigned j = 1; 2 * j <= kCachedBernoulli; ++j) {
    sum += to_real(b[2 * j]) * rising / (fact * n_power);
    rising *= Real(s + 2 * static_cast<int>(j) - 1) * Real(s + 2 * static_cast<int>(j));
    n_power *= n * n;
    fact *= Real(2 * j + 1) * Real(2 * j + 2);
  }
  return sum;
}

Real even_zeta_bernoulli(int s) {
  const unsigned two_n = static_cast<unsigned>(s);
  const BigRational b = bernoulli(two_n);
  // (-1)^{n+1} B_{2n} 2^{2n-1} / (2n)!  times pi^{2n}
  BigRational coeff = b * BigRational(boost::multiprecision::pow(BigInt(2), two_n - 1)) /
                      BigRational(factorial(two_n));
  if ((two_n / 2) % 2 == 0) coeff = -coeff;
  return to_real(coeff) * boost::multiprecision::pow(pi(), static_cast<int>(two_n));
}

}  // namespace

BigRational bernoulli(unsigned n) {
  const auto& table = cached_bernoulli();
  if (n <= kCachedBernoulli) return table[n];
  if (n % 2 == 1) return BigRational(0);
  return bernoulli_table(n).back();
}

Real zeta(int s, const PrecisionContext& ctx) {
  if (s < 2) throw DomainError("zeta(s) requires integer s >= 2, got " + std::to_string(s));
  if (s % 2 == 0) return even_zeta_bernoulli(s);

  const std::uint64_t n_terms =
      std::max<std::uint64_t>(10'000, std::uint64_t(ctx.digits()) * ctx.digits());
  static std::mutex mutex;
  static std::map<std::pair<int, std::uint64_t>, Real> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({s, n_terms}); it != cache.end()) return it->second;
  }
  Real value = odd_zeta_euler_maclaurin(s, n_terms);
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{s, n_terms}, std::move(value)).first->second;
}

Real polylog(int s, const Real& z, const PrecisionContext& ctx) {
  if (s < 1) throw DomainError("polylog order must be >= 1");
  if (z < 0 || z > 1) throw DomainError("polylog argument must lie in [0, 1]");
  if (z == 1) {
    if (s == 1) throw DomainError("Li_1(1) diverges");
    return zeta(s, ctx);
  }
  if (z == 0) return 0;
  if (s == 1) return -log1p(-z);

  // Target a hundredth of epsilon so downstream sums keep the contract.
  const Real target = ctx.epsilon() / 100;
  const Real one_minus_z = 1 - z;
  Real sum = 0;
  Real zk = 1;
  for (std::uint64_t k = 1; k <= kMaxPolylogTerms; ++k) {
    zk *= z;
    sum += zk / int_power(k, s);
    if (k % 16 == 0) {
      Real tail = zk * z / (one_minus_z * int_power(k + 1, s));
      if (tail <= target) return sum;
    }
  }
  throw ConvergenceError("polylog series did not reach tolerance", to_decimal(sum, ctx),
                         to_decimal(sum, ctx));
}

HarmonicSum harmonic(std::uint64_t upper, unsigned order, Parity parity) {
  if (order < 1) throw DomainError("harmonic order must be >= 1");
  BigRational value = 0;
  if (parity == Parity::all) {
    for (std::uint64_t i = 1; i <= upper; ++i) value += inverse_power(BigInt(i), order);
  } else {
    for (std::uint64_t i = 0; i <= upper; ++i) value += inverse_power(BigInt(2 * i + 1), order);
  }
  return HarmonicSum{upper, order, parity, std::move(value)};
}

Real odd_zeta_reduction(int m, const PrecisionContext& ctx) {
  if (m < 2) throw DomainError("odd zeta reduction requires m >= 2");
  Real factor = 1 - boost::multiprecision::pow(Real(2), -m);
  return factor * zeta(m, ctx) - 1;
}

Real euler_phi_truncated(const Real& q, std::uint64_t terms) {
  Real product = 1;
  Real qn = 1;
  for (std::uint64_t n = 1; n <= terms; ++n) {
    qn *= q;
    product *= 1 - qn;
  }
  return product;
}

Real euler_phi_partial(const Real& q, const PrecisionContext& ctx) {
  if (q < 0 || q >= 1) throw DomainError("phi(q) requires 0 <= q < 1");
  if (q == 0) return 1;
  const Real one_minus_q = 1 - q;
  const Real scale = one_minus_q * one_minus_q;
  Real product = 1;
  Real qn = 1;
  for (std::uint64_t n = 1; n <= kMaxProductTerms; ++n) {
    qn *= q;
    product *= 1 - qn;
    // |log prod_{j>n}(1 - q^j)| <= q^{n+1} / (1-q)^2
    if (qn * q <= ctx.epsilon() * scale) return product;
  }
  throw ConvergenceError("phi(q) product did not reach tolerance", to_decimal(product, ctx),
                         to_decimal(product, ctx));
}

namespace {

Real log_phi_direct(const Real& q, const Real& tolerance) {
  Real sum = 0;
  Real qn = 1;
  const Real one_minus_q = 1 - q;
  const Real scale = one_minus_q * one_minus_q;
  for (std::uint64_t n = 1; n <= kMaxProductTerms; ++n) {
    qn *= q;
    sum += log1p(-qn);
    if (qn * q <= tolerance * scale) break;
  }
  return sum;
}

}  // namespace

Real log_euler_phi(const Real& q, const PrecisionContext& ctx) {
  if (q < 0 || q >= 1) throw DomainError("phi(q) requires 0 <= q < 1");
  if (q == 0) return 0;
  const Real tolerance = ctx.epsilon() / 100;
  if (q <= Real(0.5)) return log_phi_direct(q, tolerance);

  const Real t = -log1p(q - 1);
  const Real two_pi = 2 * pi();
  const Real q_dual = exp(-two_pi * two_pi / t);
  return log(two_pi / t) / 2 + t / 24 - pi() * pi() / (6 * t) + log_phi_direct(q_dual, tolerance);
}

}  // namespace zetalab::specfun
