#include "commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>

#include "zetalab/antider.hpp"
#include "zetalab/beukers.hpp"
#include "zetalab/closedforms.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/quad.hpp"
#include "zetalab/specfun.hpp"

namespace zetalab::cli {

namespace {

using Clock = std::chrono::steady_clock;
namespace cf = closedforms;

struct Check {
  std::string id;
  Params params;
  std::function<Report()> run;
};

Report compare(std::string id, Params params, const Real& numeric, const Real& reference,
               const Real& tolerance, const PrecisionContext& ctx) {
  Report r;
  r.id = std::move(id);
  r.params = std::move(params);
  const Real residual = abs(numeric - reference);
  r.numeric = to_decimal(numeric, ctx);
  r.reference = to_decimal(reference, ctx);
  r.residual = to_decimal(residual, ctx);
  r.tolerance = to_decimal(tolerance, ctx);
  r.status = residual <= tolerance ? Status::pass : Status::fail;
  return r;
}

// Counting check: numeric is a violation count that must be zero.
Report count_check(std::string id, Params params, int violations) {
  Report r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.numeric = std::to_string(violations);
  r.reference = "0";
  r.residual = std::to_string(violations);
  r.tolerance = "0";
  r.status = violations == 0 ? Status::pass : Status::fail;
  return r;
}

std::string str(long long v) { return std::to_string(v); }

std::vector<int> pick(const std::optional<int>& value, std::vector<int> defaults, int lo, int hi,
                      const char* name) {
  if (!value) return defaults;
  if (*value < lo || *value > hi)
    throw UsageError(std::string("--") + name + " must be in [" + str(lo) + ", " + str(hi) + "]");
  return {*value};
}

std::vector<int> k_range(const Options& o, int default_max, int hi) {
  if (o.k) return pick(o.k, {}, 1, hi, "k");
  const int kmax = o.k_max.value_or(default_max);
  if (kmax < 1 || kmax > hi) throw UsageError("--k-max must be in [1, " + str(hi) + "]");
  std::vector<int> ks;
  for (int k = 1; k <= kmax; ++k) ks.push_back(k);
  return ks;
}

void reject(const Options& o, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    const std::string s = name;
    const bool given = (s == "k" && o.k) || (s == "k-max" && o.k_max) || (s == "n" && o.n) ||
                       (s == "r" && o.r) || (s == "m" && o.m);
    if (given) throw UsageError("--" + s + " does not apply to this command");
  }
}

Real signed_unit(int n) { return n % 2 == 1 ? Real(1) : Real(-1); }

Real pow_int(int base, int e) {
  Real out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// theorem21: (-1)^{n+1} times the hypercube integral against zeta(2n+1).
std::vector<Check> thm21_checks(const Options& o, const PrecisionContext& ctx) {
  reject(o, {"k", "k-max", "r", "m"});
  std::vector<Check> out;
  for (int n : pick(o.n, {1, 2}, 1, 5, "n")) {
    Params params{{"n", str(n)}};
    out.push_back({"thm21", params, [=, &ctx] {
      const Real reference = specfun::zeta(2 * n + 1, ctx);
      if (n >= 4) {
        const auto mc = quad::monte_carlo_integral(quad::IntegralSpec::theorem21(n), o.samples,
                                                   o.seed);
        Params p = params;
        p.emplace_back("samples", std::to_string(o.samples));
        p.emplace_back("seed", std::to_string(o.seed));
        return compare("thm21", p, signed_unit(n) * Real(mc.estimate), reference,
                       Real(3 * mc.standard_error), PrecisionContext(15));
      }
      const Real tolerance = n <= 2 ? pow10(-12) : pow10(-6);
      const PrecisionContext qctx = n <= 2 ? ctx : ctx.with_epsilon(pow10(-10));
      const Real value = quad::integrate(quad::IntegralSpec::theorem21(n), qctx);
      return compare("thm21", params, signed_unit(n) * value, reference, tolerance, ctx);
    }});
  }
  return out;
}

std::vector<Check> cor23_checks(const Options& o, const PrecisionContext& ctx) {
  reject(o, {"k", "k-max", "m"});
  std::vector<Check> out;
  const auto rs = pick(o.r, {1, 2, 3, 4, 5}, 1, 10, "r");
  for (int n : pick(o.n, {1, 2}, 1, 3, "n")) {
    const Real tolerance = n <= 2 ? pow10(-10) : pow10(-6);
    const PrecisionContext qctx = n <= 2 ? ctx : ctx.with_epsilon(pow10(-10));
    auto scaled = std::make_shared<std::vector<Real>>(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const int r = rs[i];
      Params params{{"n", str(n)}, {"r", str(r)}};
      out.push_back({"cor23", params, [=, &ctx] {
        const Real zeta = specfun::zeta(2 * n + 1, ctx);
        const Real value =
            signed_unit(n) * quad::integrate(quad::IntegralSpec::corollary23(n, r), qctx);
        (*scaled)[i] = value * pow_int(r, 2 * n);
        return compare("cor23", params, value, zeta / pow_int(r, 2 * n), tolerance, ctx);
      }});
    }
    // Runs after the per-r checks above (checks execute in order).
    for (std::size_t i = 0; i < rs.size(); ++i) {
      Params params{{"n", str(n)}, {"r", str(rs[i])}};
      out.push_back({"cor23-scaled", params, [=, &ctx] {
        return compare("cor23-scaled", params, (*scaled)[i], specfun::zeta(2 * n + 1, ctx),
                       tolerance, ctx);
      }});
    }
    if (rs.size() > 1) {
      Params params{{"n", str(n)}};
      out.push_back({"cor23-spread", params, [=, &ctx] {
        const auto [lo, hi] = std::minmax_element(scaled->begin(), scaled->end());
        return compare("cor23-spread", params, *hi - *lo, Real(0), tolerance, ctx);
      }});
    }
  }
  return out;
}

// Closed form, series oracle and quadrature compared pairwise.
void three_way(std::vector<Check>& out, const std::string& prefix, Params params,
               std::function<Real()> closed, std::function<cf::SeriesOracle()> oracle,
               std::function<Real()> quadrature, const PrecisionContext& ctx) {
  struct Values {
    Real closed, quad;
    cf::SeriesOracle oracle;
  };
  auto v = std::make_shared<Values>();
  const Real tolerance = pow10(-10);
  out.push_back({prefix + "-closed-oracle", params, [=, &ctx] {
    v->closed = closed();
    v->oracle = oracle();
    return compare(prefix + "-closed-oracle", params, v->closed, v->oracle.value, tolerance, ctx);
  }});
  out.push_back({prefix + "-oracle-tail", params, [=, &ctx] {
    Params p = params;
    p.emplace_back("terms", std::to_string(v->oracle.terms));
    return compare(prefix + "-oracle-tail", p, v->oracle.tail_bound, Real(0), pow10(-18), ctx);
  }});
  out.push_back({prefix + "-quad-oracle", params, [=, &ctx] {
    v->quad = quadrature();
    return compare(prefix + "-quad-oracle", params, v->quad, v->oracle.value, tolerance, ctx);
  }});
  out.push_back({prefix + "-closed-quad", params, [=, &ctx] {
    return compare(prefix + "-closed-quad", params, v->closed, v->quad, tolerance, ctx);
  }});
}

std::vector<Check> thm25_checks(const Options& o, const PrecisionContext& ctx) {
  reject(o, {"n", "m"});
  std::vector<Check> out;
  for (int r : pick(o.r, {1, 2}, 1, 2, "r")) {
    const std::string prefix = r == 1 ? "thm25i" : "thm25ii";
    for (int k : o.k || o.k_max ? k_range(o, 3, 20) : std::vector<int>{1, 2, 3}) {
      three_way(
          out, prefix, {{"k", str(k)}},
          [=, &ctx] {
            return form_eval(r == 1 ? cf::closed_form_i(k) : cf::closed_form_ii(k), ctx);
          },
          [=, &ctx] { return r == 1 ? cf::oracle_i(k, ctx) : cf::oracle_ii(k, ctx); },
          [=, &ctx] { return quad::integrate(quad::IntegralSpec::theorem25(k, r), ctx); }, ctx);
    }
  }
  return out;
}

std::vector<Check> zkm_checks(const Options& o, const PrecisionContext& ctx) {
  reject(o, {"n", "r"});
  std::vector<Check> out;
  const auto ms = pick(o.m, {1, 2, 3}, 1, 8, "m");
  for (int m : ms) {
    for (int k : o.k || o.k_max ? k_range(o, 3, 20) : std::vector<int>{1, 2, 3}) {
      three_way(
          out, "zkm", {{"k", str(k)}, {"m", str(m)}},
          [=, &ctx] { return form_eval(cf::z_closed_form(k, m).form, ctx); },
          [=, &ctx] { return cf::oracle_z(k, m, ctx); },
          [=, &ctx] {
            return cf::z_integral_sign(m) * quad::integrate(quad::IntegralSpec::z_km(k, m), ctx);
          },
          ctx);
    }
  }
  if (std::find(ms.begin(), ms.end(), 3) != ms.end()) {
    out.push_back({"zkm-bound-decreasing", {{"m", "3"}}, [&ctx] {
      int violations = 0;
      Real previous = cf::bound_rhs(cf::BoundFamily::Z, 10, 3, ctx).value;
      for (int k = 11; k <= 50; ++k) {
        const Real value = cf::bound_rhs(cf::BoundFamily::Z, k, 3, ctx).value;
        if (!(value < previous)) ++violations;
        previous = value;
      }
      return count_check("zkm-bound-decreasing", {{"m", "3"}, {"k_from", "10"}, {"k_to", "50"}},
                         violations);
    }});
    out.push_back({"zkm-tscaled-above-k20", {{"m", "3"}}, [&ctx] {
      int violations = 0;
      const Real base = cf::t_scaled_bound(20, 3, ctx);
      for (int k = 21; k <= 50; ++k)
        if (!(cf::t_scaled_bound(k, 3, ctx) > base)) ++violations;
      return count_check("zkm-tscaled-above-k20", {{"m", "3"}, {"k_from", "21"}, {"k_to", "50"}},
                         violations);
    }});
    out.push_back({"zkm-tscaled-increasing", {{"m", "3"}}, [&ctx] {
      int violations = 0;
      Real previous = cf::t_scaled_bound(20, 3, ctx);
      for (int k = 21; k <= 50; ++k) {
        const Real value = cf::t_scaled_bound(k, 3, ctx);
        if (!(value > previous)) ++violations;
        previous = value;
      }
      return count_check("zkm-tscaled-increasing", {{"m", "3"}, {"k_from", "21"}, {"k_to", "50"}},
                         violations);
    }});
  }
  return out;
}

std::vector<Check> janous_checks(const Options& o, const PrecisionContext& ctx) {
  reject(o, {"k", "k-max", "n", "r", "m"});
  return {{"janous", {}, [&ctx] {
             const Real value = quad::integrate(quad::IntegralSpec::janous(), ctx) / 2;
             return compare("janous", {}, value, specfun::zeta(3, ctx), pow10(-12), ctx);
           }}};
}

std::vector<Check> eulerphi_checks(const Options& o, const PrecisionContext& ctx) {
  reject(o, {"k", "k-max", "r", "m"});
  std::vector<Check> out;
  const auto ns = pick(o.n, {1, 2}, 1, 2, "n");
  for (int n : ns) {
    Params params{{"n", str(n)}};
    out.push_back({"eulerphi", params, [=, &ctx] {
      const PrecisionContext qctx = ctx.with_epsilon(n == 1 ? pow10(-12) : pow10(-9));
      const Real sign = n % 2 == 1 ? Real(1) : Real(-1);
      const Real value = sign * quad::euler_phi_integral(n, qctx);
      const Real reference = specfun::zeta(2 * n, ctx) * specfun::zeta(2 * n + 1, ctx);
      return compare("eulerphi", params, value, reference, n == 1 ? pow10(-8) : pow10(-6), ctx);
    }});
  }
  if (std::find(ns.begin(), ns.end(), 1) != ns.end()) {
    for (int terms : {50, 100}) {
      Params params{{"n", "1"}, {"terms", str(terms)}};
      out.push_back({"eulerphi-truncated", params, [=, &ctx] {
        const Real value =
            quad::euler_phi_truncated_integral(1, static_cast<std::uint64_t>(terms),
                                               ctx.with_epsilon(pow10(-12)));
        const Real reference =
            specfun::zeta(3, ctx) * to_real(specfun::harmonic(terms, 2).value);
        return compare("eulerphi-truncated", params, value, reference, pow10(-8), ctx);
      }});
    }
  }
  return out;
}

std::vector<Check> mn_checks(const Options& o, const PrecisionContext& ctx) {
  reject(o, {"k", "k-max", "r", "m"});
  std::vector<Check> out;
  const unsigned digits = std::max(ctx.digits(), 40u);
  for (int n : pick(o.n, {1, 2, 3}, 1, 3, "n")) {
    for (int p = 0; p < 5; ++p) {
      Params params{{"n", str(n)}, {"point", str(p)}, {"seed", std::to_string(o.seed)}};
      out.push_back({"mn-partial", params, [=] {
        const PrecisionContext fctx(digits);
        std::vector<Real> coords;
        for (int i = 0; i < n; ++i)
          coords.push_back(Real(0.05) +
                           Real(0.9) * Real(quad::uniform_deviate(
                                           o.seed, static_cast<std::uint64_t>(p),
                                           static_cast<std::uint32_t>(i),
                                           static_cast<std::uint32_t>(n))));
        const antider::HypercubePoint x(coords);
        const Real fd = antider::mixed_partial_fd(x, pow10(-4), fctx);
        const Real exact = antider::hypercube_integrand(x);
        // residual is relative
        Report r = compare("mn-partial", params, fd, exact, pow10(-6), fctx);
        const Real relative = abs(fd - exact) / abs(exact);
        r.residual = to_decimal(relative, fctx);
        r.status = relative <= pow10(-6) ? Status::pass : Status::fail;
        return r;
      }});
    }
  }
  return out;
}

std::vector<Check> kontsevich_checks(const Options& o, const PrecisionContext& ctx) {
  reject(o, {"k-max", "n", "r", "m"});
  if (o.samples < 10'000) throw UsageError("--samples must be at least 10000");
  std::vector<Check> out;
  for (int k : pick(o.k, {2, 3}, 2, 8, "k")) {
    Params params{{"k", str(k)}, {"samples", std::to_string(o.samples)},
                  {"seed", std::to_string(o.seed)}};
    out.push_back({"kontsevich", params, [=, &ctx] {
      const auto mc = quad::monte_carlo_kontsevich(k, o.samples, o.seed, ctx);
      return compare("kontsevich", params, Real(mc.estimate), specfun::zeta(k, ctx),
                     Real(3 * mc.standard_error), PrecisionContext(15));
    }});
    out.push_back({"kontsevich-determinism", params, [=, &ctx] {
      const auto one = quad::monte_carlo_kontsevich(k, o.samples, o.seed, ctx, 1);
      const auto two = quad::monte_carlo_kontsevich(k, o.samples, o.seed, ctx, 4);
      const bool same = one.estimate == two.estimate && one.standard_error == two.standard_error;
      Report r = count_check("kontsevich-determinism", params, same ? 0 : 1);
      r.numeric = to_decimal(two.estimate);
      r.reference = to_decimal(one.estimate);
      return r;
    }});
  }
  return out;
}

}  // namespace

std::vector<Report> run_verify(const std::string& target, const Options& o) {
  if (o.digits < PrecisionContext::kMinDigits || o.digits > PrecisionContext::kMaxDigits)
    throw UsageError("--digits must be in [" + str(PrecisionContext::kMinDigits) + ", " +
                     str(PrecisionContext::kMaxDigits) + "]");
  const PrecisionContext ctx(o.digits);
  std::vector<Check> checks;
  if (target == "thm21") checks = thm21_checks(o, ctx);
  else if (target == "cor23") checks = cor23_checks(o, ctx);
  else if (target == "thm25") checks = thm25_checks(o, ctx);
  else if (target == "zkm") checks = zkm_checks(o, ctx);
  else if (target == "janous") checks = janous_checks(o, ctx);
  else if (target == "eulerphi") checks = eulerphi_checks(o, ctx);
  else if (target == "mn-partial") checks = mn_checks(o, ctx);
  else if (target == "kontsevich") checks = kontsevich_checks(o, ctx);
  else throw UsageError("unknown verify target: " + target);

  std::vector<Report> reports;
  for (const auto& check : checks) {
    const auto start = Clock::now();
    Report r = check.run();
    if (o.timings)
      r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
                         .count();
    reports.push_back(std::move(r));
  }
  sort_reports(reports);
  return reports;
}

std::uint64_t oracle_terms_for(const std::string& family, int m, double tail) {
  // tail bounds: I 4/(6 N^6), J 4/(384 N^6), Z (m+1)!/((m+2) N^{m+2})
  double coeff = 0;
  int p = 6;
  if (family == "ik") coeff = 4.0 / 6.0;
  else if (family == "jk") coeff = 4.0 / 384.0;
  else {
    coeff = std::tgamma(m + 2) / (m + 2);
    p = m + 2;
  }
  const double n = std::ceil(std::pow(coeff / tail, 1.0 / p));
  return static_cast<std::uint64_t>(std::clamp(n, 1.0, static_cast<double>(cf::kOracleTerms)));
}

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

constexpr double kSequenceTail = 1e-18;

Table sequence_table(const std::string& family, const Options& o, const PrecisionContext& ctx,
                     bool& all_hold) {
  Table t;
  if (family == "ik" || family == "jk") {
    reject(o, {"n", "r", "m"});
    t.header = {"k", "closed", "numeric", "oracle", "residual"};
    t.numeric_columns = {true, false, false, false, false};
    const auto fam = family == "ik" ? cf::SequenceFamily::I_k : cf::SequenceFamily::J_k;
    const auto terms = oracle_terms_for(family, 0, kSequenceTail);
    for (int k : k_range(o, 10, 200)) {
      const auto rec = cf::sequence_record(fam, k, 0, ctx, terms);
      t.rows.push_back({str(k), to_string(rec.closed), to_decimal(rec.numeric, ctx),
                        to_decimal(rec.oracle, ctx), to_decimal(rec.residual, ctx)});
    }
  } else if (family == "zkm") {
    reject(o, {"n", "r"});
    const int m = pick(o.m, {3}, 1, 8, "m").front();
    t.header = {"k", "m", "closed", "numeric", "oracle", "residual", "bound", "decreased",
                "t_scaled_bound"};
    t.numeric_columns = {true, true};
    t.bool_columns = {false, false, false, false, false, false, false, false, false};
    const auto terms = oracle_terms_for(family, m, kSequenceTail);
    for (int k : k_range(o, 10, 200)) {
      const auto rec = cf::sequence_record(cf::SequenceFamily::Z_km, k, m, ctx, terms);
      const auto bound = cf::bound_rhs(cf::BoundFamily::Z, k, m, ctx);
      t.rows.push_back({str(k), str(m), to_string(rec.closed), to_decimal(rec.numeric, ctx),
                        to_decimal(rec.oracle, ctx), to_decimal(rec.residual, ctx),
                        to_decimal(bound.value, ctx),
                        bound.decreased ? yes(*bound.decreased) : "",
                        to_decimal(cf::t_scaled_bound(k, m, ctx), ctx)});
    }
  } else if (family == "beukers") {
    reject(o, {"n", "r", "m"});
    t.header = {"k", "A", "B", "magnitude", "bound", "within_bound", "I_k"};
    t.numeric_columns = {true};
    t.bool_columns = {false, false, false, false, false, true, false};
    for (int k : k_range(o, 12, beukers::kMaxLinearFormK)) {
      const auto form = beukers::beukers_linear_form(k);
      const Real magnitude = form.magnitude(ctx);
      const Real bound = pow(Real(4) / 5, k);
      const Real ik = form_eval(beukers::beukers_integral(k), ctx);
      const bool within = magnitude > 0 && magnitude <= bound && ik > 0;
      all_hold = all_hold && within;
      t.rows.push_back({str(k), form.A.str(), form.B.str(), to_decimal(magnitude, ctx),
                        to_decimal(bound, ctx), yes(within), to_decimal(ik, ctx)});
    }
  } else if (family == "lcm") {
    reject(o, {"n", "r", "m"});
    t.header = {"k", "d_k", "3^k", "d_k<3^k"};
    t.numeric_columns = {true};
    t.bool_columns = {false, false, false, true};
    const auto ks = k_range(o, 10, 5000);
    const auto table = beukers::lcm_table(ks.back());
    BigInt three = 1;
    int reached = 0;
    for (int k : ks) {
      while (reached < k) {
        three *= 3;
        ++reached;
      }
      const BigInt& d = table[static_cast<std::size_t>(k - 1)];
      const bool below = d < three;
      all_hold = all_hold && below;
      t.rows.push_back({str(k), d.str(), three.str(), yes(below)});
    }
  } else if (family == "bounds") {
    reject(o, {"n", "r"});
    const int m = pick(o.m, {3}, 1, 8, "m").front();
    t.header = {"family", "k", "m", "lhs", "rhs", "holds"};
    t.numeric_columns = {false, true, true};
    t.bool_columns = {false, false, false, false, false, true};
    const std::array<std::pair<const char*, cf::BoundFamily>, 3> fams = {
        {{"I", cf::BoundFamily::I}, {"J", cf::BoundFamily::J}, {"Z", cf::BoundFamily::Z}}};
    const auto ks = k_range(o, 10, 200);
    for (const auto& [name, fam] : fams) {
      for (int k : ks) {
        const Real lhs = cf::bound_lhs(fam, k, m, ctx);
        const Real rhs = cf::bound_rhs(fam, k, m, ctx).value;
        const bool holds = lhs > 0 && lhs <= rhs;
        all_hold = all_hold && holds;
        t.rows.push_back({name, str(k), fam == cf::BoundFamily::Z ? str(m) : "0",
                          to_decimal(lhs, ctx), to_decimal(rhs, ctx), yes(holds)});
      }
    }
  } else {
    throw UsageError("unknown sequence family: " + family);
  }
  return t;
}

}  // namespace

SequenceResult run_sequence(const std::string& family, const Options& o) {
  if (o.digits < PrecisionContext::kMinDigits || o.digits > PrecisionContext::kMaxDigits)
    throw UsageError("--digits must be in [" + str(PrecisionContext::kMinDigits) + ", " +
                     str(PrecisionContext::kMaxDigits) + "]");
  const PrecisionContext ctx(o.digits);
  SequenceResult out;
  out.table = sequence_table(family, o, ctx, out.all_hold);
  return out;
}

Table errata_rows(const PrecisionContext& ctx) {
  Table t;
  t.header = {"id", "subject", "published", "implemented", "check"};
  for (const auto& e : errata_table(ctx))
    t.rows.push_back({e.id, e.subject, e.published, e.implemented, e.check});
  std::sort(t.rows.begin(), t.rows.end());
  return t;
}

}  // namespace zetalab::cli
