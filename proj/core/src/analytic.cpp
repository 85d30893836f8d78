#include "intval/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "intval/concordance.hpp"
#include "intval/diffcalc.hpp"
#include "intval/errors.hpp"
#include "intval/parallel.hpp"

namespace intval {
namespace {

void check_contour_domain(std::int64_t n, std::int64_t s, std::int64_t mu) {
  if (n < 4) throw DomainError("contour integrals need n >= 4");
  if (s < 2 || 2 * s > n) throw DomainError("contour integrals need 2 <= s <= n/2");
  if (mu < 0 || mu > s) throw DomainError("contour integrals need 0 <= mu <= s");
}

// log(n! / prod_{k=0}^{n} |z - k|) + mu * log(|z - 2n| / n) at z = x + iy.
BigFloat log_kernel(std::int64_t n, std::int64_t mu, const BigFloat& x, const BigFloat& y, const BigFloat& log_nfact) {
  const Precision p = x.precision();
  const BigFloat y2 = y * y;
  BigFloat product(1L, p);
  for (std::int64_t k = 0; k <= n; ++k) {
    const BigFloat dx = x - static_cast<long>(k);
    product *= dx * dx + y2;
  }
  BigFloat out = log_nfact - log(product) / 2L;
  if (mu > 0) {
    const BigFloat dx = x - 2L * static_cast<long>(n);
    out += (log(dx * dx + y2) / 2L - log(BigFloat(static_cast<long>(n), p))) * static_cast<long>(mu);
  }
  return out;
}

// Digits needed so that an alternating binomial sum whose terms reach
// 10^log10_terms still resolves a result of size 10^log10_value.
unsigned working_digits(unsigned requested, double log10_terms, double log10_value) {
  return requested + 30 + static_cast<unsigned>(std::max(0.0, std::ceil(log10_terms - log10_value)));
}

struct MixedRow {
  BigFloat max_abs;
  std::int64_t n_at_max = 0;
  BigFloat max_rel;
};

// Tabulates Δ^(n-a)(Δ-1)^a of base^x at x = a for n in [n_lo, n_hi] and
// compares with the eigenvalue form (base-1)^(n-a) (base-2)^a base^a.
MixedRow mixed_against_closed_form(const BigFloat& base, std::int64_t a, std::int64_t n_lo, std::int64_t n_hi) {
  const Precision p = base.precision();
  std::vector<BigFloat> samples;
  samples.reserve(static_cast<std::size_t>(n_hi) + 1);
  BigFloat power = pow(base, static_cast<long>(a));
  for (std::int64_t j = 0; j <= n_hi; ++j) {
    samples.push_back(power);
    power *= base;
  }
  const auto table = diff::mixed_orders<BigFloat>(std::span<const BigFloat>(samples), static_cast<std::size_t>(a),
                                                  static_cast<std::size_t>(n_lo), static_cast<std::size_t>(n_hi));

  const BigFloat up = base - 1L;
  const BigFloat fixed = pow((base - 2L) * base, static_cast<long>(a));
  MixedRow row{BigFloat(p), n_lo, BigFloat(p)};
  BigFloat closed = pow(up, static_cast<long>(n_lo - a)) * fixed;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const BigFloat& direct = table[static_cast<std::size_t>(n - n_lo)];
    const BigFloat magnitude = abs(closed);
    if (magnitude > row.max_abs) {
      row.max_abs = magnitude;
      row.n_at_max = n;
    }
    if (!closed.is_zero()) row.max_rel = max(row.max_rel, abs(direct - closed) / magnitude);
    closed *= up;
  }
  return row;
}

}  // namespace

BivariatePoly build_G(std::int64_t a, std::int64_t k) {
  if (k < 0 || k > a) throw DomainError("build_G needs 0 <= k <= a");
  BivariatePoly g = BivariatePoly::constant(1);
  for (std::int64_t q = 0; q < k; ++q) {
    const auto factor = BivariatePoly::constant(1) + BivariatePoly::term(1, 1, 0) +
                        BivariatePoly::term(Rational(static_cast<long>(q)), 0, 1);
    g = g * factor;
  }
  for (std::int64_t q = k; q < a; ++q) {
    g = g * (BivariatePoly::constant(1) + BivariatePoly::term(Rational(static_cast<long>(-q)), 0, 1));
  }
  return g;
}

BivariatePoly delta_a_G(std::int64_t a) {
  if (a < 0) throw DomainError("delta_a_G needs a >= 0");
  BivariatePoly sum;
  for (std::int64_t k = 0; k <= a; ++k) {
    Rational w(binomial(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(k)));
    if ((a - k) % 2 == 1) w = -w;
    sum += build_G(a, k) * w;
  }
  return sum;
}

ABoundReport verify_A_bounds(std::int64_t a) {
  if (a < 1) throw DomainError("verify_A_bounds needs a >= 1");
  const BivariatePoly poly = delta_a_G(a);
  const BigInt six_a = ipow(BigInt(6), static_cast<std::uint64_t>(a));
  ABoundReport report;
  report.a = a;
  report.terms = poly.terms().size();
  for (const auto& [key, value] : poly.terms()) {
    const auto [mu, nu] = key;
    if (static_cast<std::int64_t>(mu) + 2 * static_cast<std::int64_t>(nu) < a) {
      report.violations.push_back({ABoundViolation::Kind::support, mu, nu, value});
    }
    const BigInt bound = six_a * ipow(BigInt(static_cast<long>(a)), nu);
    Rational ratio = abs(value) / Rational(bound);
    ratio.canonicalize();
    if (ratio > 1) report.violations.push_back({ABoundViolation::Kind::magnitude, mu, nu, value});
    if (!report.argmax || ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.argmax = key;
    }
  }
  return report;
}

HighPrecisionValue quad_I(std::int64_t n, std::int64_t s, std::int64_t mu, const QuadratureOptions& options) {
  check_contour_domain(n, s, mu);
  const Precision p = options.precision;
  const BigFloat radius(2L * static_cast<long>(n), p);
  // The arc runs through z = 2n and ends where Re z = -s.
  const BigFloat theta0 = acos(BigFloat(-static_cast<long>(s), p) / radius);
  // n! 2^|z| |dz|/dtheta, constant along the arc.
  const BigFloat log_prefactor = log_factorial(static_cast<unsigned long>(n), p) + BigFloat::ln2(p) * radius + log(radius);
  auto integrand = [&](const BigFloat& theta) {
    return exp(log_kernel(n, mu, radius * cos(theta), radius * sin(theta), log_prefactor));
  };
  return integrate(integrand, {-theta0, BigFloat(p), theta0}, options);
}

HighPrecisionValue quad_J(std::int64_t n, std::int64_t s, std::int64_t mu, const QuadratureOptions& options) {
  check_contour_domain(n, s, mu);
  const Precision p = options.precision;
  const BigFloat x(-static_cast<long>(s), p);
  const BigFloat half_chord = sqrt(BigFloat(4L * static_cast<long>(n * n) - static_cast<long>(s * s), p));
  const BigFloat log_nfact = log_factorial(static_cast<unsigned long>(n), p);
  auto integrand = [&](const BigFloat& y) { return exp(log_kernel(n, mu, x, y, log_nfact)); };
  return integrate(integrand, {-half_chord, BigFloat(p), half_chord}, options);
}

IntegralBoundReport verify_integral_bounds(const std::vector<std::int64_t>& n_set, const IntegralBoundOptions& options) {
  struct Job {
    std::int64_t n, s, mu;
  };
  std::vector<Job> jobs;
  for (const auto n : n_set) {
    if (n < 4) throw DomainError("integral bounds need n >= 4, got " + std::to_string(n));
    for (std::int64_t s = 2; 2 * s <= n; ++s) {
      if (options.s && *options.s != s) continue;
      for (std::int64_t mu = 0; mu <= s; ++mu) {
        if (options.mu && *options.mu != mu) continue;
        if (options.mu_max && mu > *options.mu_max) continue;
        jobs.push_back({n, s, mu});
      }
    }
  }
  if (jobs.empty() && (options.s || options.mu)) throw DomainError("no admissible (s, mu) matches the request");

  const Precision p = options.quadrature.precision;
  const BigFloat slack = BigFloat(1L, p) + BigFloat(options.margin, p);
  const BigFloat d(options.d, p);

  std::vector<std::optional<IntegralCell>> cells(jobs.size());
  parallel_for(jobs.size(), options.threads, [&](std::size_t i) {
    const auto [n, s, mu] = jobs[i];
    IntegralCell cell{n, s, mu, quad_I(n, s, mu, options.quadrature), quad_J(n, s, mu, options.quadrature),
                      BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p), false, false,
                      BigFloat(p), BigFloat(p), std::nullopt, BigFloat(p)};
    const BigFloat scale = BigFloat(make_rational(options.b * s, n), p);
    const BigFloat half_mu = BigFloat(make_rational(mu, 2), p);
    const BigFloat I_factor = pow(scale, half_mu);
    const BigFloat J_factor = pow(scale, static_cast<long>(s - 1));
    cell.I_bound = d * I_factor;
    cell.J_bound = d * J_factor;
    cell.I_ratio = cell.I.upper() * slack / cell.I_bound;
    cell.J_ratio = cell.J.upper() * slack / cell.J_bound;
    cell.I_pass = cell.I_ratio < 1L;
    cell.J_pass = cell.J_ratio < 1L;
    cell.I_min_d = cell.I.upper() / I_factor;
    cell.J_min_d = cell.J.upper() / J_factor;
    const BigFloat n_over_s = BigFloat(make_rational(n, s), p);
    if (mu > 0) cell.I_min_b = n_over_s * pow(cell.I.upper() / d, BigFloat(make_rational(2, mu), p));
    cell.J_min_b = n_over_s * pow(cell.J.upper() / d, BigFloat(make_rational(1, s - 1), p));
    cells[i] = std::move(cell);
  });

  IntegralBoundReport report{options.b, options.d, options.margin, {}, 0, BigFloat(p)};
  for (auto& cell : cells) {
    if (!cell->I_pass) ++report.violations;
    if (!cell->J_pass) ++report.violations;
    report.worst_ratio = max(report.worst_ratio, max(cell->I_ratio, cell->J_ratio));
    report.cells.push_back(std::move(*cell));
  }
  return report;
}

ErrorChainReport error_chain_check(std::int64_t K, std::int64_t a_max, unsigned digits) {
  if (K < 2) throw DomainError("error chain needs K >= 2");
  if (a_max < 0) throw DomainError("error chain needs a_max >= 0");
  const Precision p = Precision::digits(digits);

  const Interval two = Interval::enclose(Rational(2), p);
  const Interval ratio = Interval::enclose(make_rational(3, 2), p) * pow(two / e_constant(p), static_cast<unsigned long>(K));
  const Interval half = Interval::enclose(make_rational(1, 2), p);
  ErrorChainReport report{K, a_max, ratio, certainly_less(ratio, Rational(1)), std::nullopt, std::nullopt, {}};

  const Interval lead = pow(two, static_cast<unsigned long>(K));
  for (std::int64_t a = 0; a <= a_max; ++a) {
    if (certainly_less(lead * pow(ratio, static_cast<unsigned long>(a)), half)) {
      report.chain_cutoff = a;
      break;
    }
  }

  const double log10_q = -static_cast<double>(K) * std::log10(std::exp(1.0));
  for (std::int64_t a = 0; a <= a_max; ++a) {
    const std::int64_t n_hi = K * (a + 1);
    const double log10_terms = a * std::log10(3.0) + (n_hi - a) * std::log10(2.0) + a * log10_q;
    const double log10_value = n_hi * std::log10(1.0 - std::pow(10.0, log10_q)) + a * log10_q;
    const Precision work = Precision::digits(working_digits(digits, log10_terms, log10_value));
    const BigFloat q = exp(BigFloat(-static_cast<long>(K), work));
    auto row = mixed_against_closed_form(q, a, a, n_hi);
    report.rows.push_back({a, row.max_abs.with_precision(p), row.n_at_max, row.max_rel.with_precision(p)});
  }

  for (std::int64_t a = a_max; a >= 0; --a) {
    if (!(report.rows[static_cast<std::size_t>(a)].max_abs < BigFloat(make_rational(1, 2), p))) break;
    report.direct_cutoff = a;
  }
  return report;
}

DecayExpPolyReport decay_exppoly(std::int64_t K, std::int64_t a_lo, std::int64_t a_hi, unsigned digits) {
  if (K < 4) throw DomainError("decay_exppoly needs K >= 4");
  if (a_lo < 0 || a_hi < a_lo) throw DomainError("decay_exppoly needs 0 <= a_lo <= a_hi");
  const Precision p = Precision::digits(digits);
  const double c_double = std::pow(2.0, 1.0 + 2.0 / static_cast<double>(K));

  DecayExpPolyReport report{K, BigFloat(p), {}, std::nullopt, std::nullopt, std::nullopt, BigFloat(p), true};
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    const std::int64_t n_lo = K * a;
    const std::int64_t n_hi = K * (a + 1);
    const double log10_terms =
        a * std::log10(3.0) + (n_hi - a) * std::log10(2.0) + (a + n_hi) * std::log10(c_double);
    const double log10_value = (n_lo - a) * std::log10(c_double - 1.0) +
                               a * std::log10(std::abs(c_double - 2.0) * c_double);
    const Precision work = Precision::digits(working_digits(digits, log10_terms, log10_value));
    const BigFloat exponent = BigFloat(1L, work) + BigFloat(make_rational(2, K), work);
    const BigFloat c = pow(BigFloat(2L, work), exponent);
    if (a == a_lo) report.c = c.with_precision(p);
    auto row = mixed_against_closed_form(c, a, n_lo, n_hi);
    report.max_rel_discrepancy = max(report.max_rel_discrepancy, row.max_rel.with_precision(p));
    report.rows.push_back({a, row.max_abs.with_precision(p), row.n_at_max, row.max_rel.with_precision(p)});
  }
  report.closed_form_ok = report.max_rel_discrepancy < BigFloat("1e-20", p);

  if (report.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto m = static_cast<double>(report.rows.size());
    for (const auto& row : report.rows) {
      const auto x = static_cast<double>(row.a);
      const double y = log(row.max_abs).to_double();
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    report.slope = slope;
    report.intercept = (sy - slope * sx) / m;
    report.C_star = exp(BigFloat(slope, p));
  }
  return report;
}

DecayPolyReport decay_poly(const Rational& C, std::int64_t k, std::int64_t n_max) {
  if (C <= 1) throw DomainError("decay_poly needs C > 1");
  if (k < 0) throw DomainError("decay_poly needs k >= 0");
  if (n_max < 0) throw DomainError("decay_poly needs n_max >= 0");

  std::vector<Rational> samples;
  Rational power = 1;
  for (std::int64_t x = 0; x <= n_max; ++x) {
    samples.push_back(power);
    power *= C;
  }
  const auto orders = diff::orders_at_origin<Rational>(std::span<const Rational>(samples), 0,
                                                       static_cast<std::size_t>(n_max));
  bool eigen_ok = true;
  Rational expected = 1;
  for (const auto& value : orders) {
    if (value != expected) eigen_ok = false;
    expected *= C - 1;
  }

  const Interval threshold = growth_threshold(static_cast<std::uint64_t>(k));
  const Precision p = threshold.precision();
  const Interval one = Interval::enclose(Rational(1), p);
  const Interval e_gamma = threshold - one;
  const Interval base = Interval::enclose(C - 1, p);
  const bool hypothesis = certainly_less(C, threshold);
  const bool conclusion = certainly_less(base, e_gamma);
  BigFloat margin = (e_gamma - base).lo();
  return {C, k, n_max, eigen_ok, threshold, hypothesis, conclusion, std::move(margin)};
}

}  // namespace intval
