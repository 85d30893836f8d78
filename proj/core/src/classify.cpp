#include "intval/classify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "intval/diffcalc.hpp"
#include "intval/errors.hpp"
#include "intval/parallel.hpp"

namespace intval {
namespace {

// Solves the square system [matrix | rhs] exactly. Bareiss elimination keeps
// every intermediate entry an integer; returns nullopt when singular.
std::optional<std::vector<Rational>> solve_fraction_free(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) std::swap(m[pivot], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
    x[i] = acc / m[i][i];
  }
  return x;
}

void note_failure(ClassificationReport& report, std::size_t cap, FailureRecord record) {
  if (report.failures.size() < cap) report.failures.push_back(std::move(record));
}

// Extends the verified range downward from `from` while samples still match.
template <class ClosedForm>
std::int64_t extend_backward(const Sequence& s, std::int64_t from, const ClosedForm& closed_form) {
  while (from > s.start() && s.at(from - 1) == closed_form(from - 1)) --from;
  return from;
}

}  // namespace

Rational ExpPolyForm::operator()(std::int64_t a) const { return eval_expoly(*this, a); }

Rational eval_expoly(const ExpPolyForm& form, std::int64_t a) {
  if (a < 0) throw DomainError("eval_expoly needs a >= 0");
  const Rational x(static_cast<long>(a));
  return form.p1(x) + form.p2(x) * pow2(static_cast<std::uint64_t>(a));
}

Sequence synthesize(const ExpPolyForm& form, std::int64_t start, std::size_t length) {
  std::vector<Rational> values;
  values.reserve(length);
  for (std::size_t i = 0; i < length; ++i) values.push_back(eval_expoly(form, start + static_cast<std::int64_t>(i)));
  return Sequence(start, std::move(values));
}

PolyaResult polya_reconstruct(const Sequence& s, std::int64_t B) {
  if (!s.contains(B) || s.last() < B + 2) {
    throw InsufficientDataError("Newton reconstruction from " + std::to_string(B) +
                                " needs samples through " + std::to_string(B + 2));
  }
  const auto window = s.window(B, s.last());
  const std::size_t top = window.size() - 1;

  PolyaResult result;
  result.differences = diff::orders_at_origin<Rational>(window, 0, top);

  std::ptrdiff_t degree = -1;
  for (std::size_t j = 0; j <= top; ++j) {
    if (result.differences[j] != 0) degree = static_cast<std::ptrdiff_t>(j);
  }
  if (degree == static_cast<std::ptrdiff_t>(top)) {
    result.failure = PolyaFailure::no_vanishing_tail;
    return result;
  }

  RationalPoly poly;
  for (std::ptrdiff_t j = 0; j <= degree; ++j) {
    poly += binomial_poly(B, static_cast<std::size_t>(j)) * result.differences[static_cast<std::size_t>(j)];
  }
  for (std::int64_t m = B; m <= s.last(); ++m) {
    if (poly(Rational(static_cast<long>(m))) != s.at(m)) {
      result.failure = PolyaFailure::mismatch;
      result.witness = m;
      return result;
    }
  }
  result.poly = std::move(poly);
  return result;
}

ExpPolyForm expoly_fit(const Sequence& s, std::int64_t B, std::int64_t K) {
  if (B < 1) throw DomainError("expoly_fit needs B >= 1");
  if (K < 2) throw DomainError("expoly_fit needs K >= 2");
  const std::int64_t first = B;
  const std::int64_t last = K * B + B - 1;
  const auto samples = s.window(first, last);

  const auto n1 = static_cast<std::size_t>((K - 1) * B);
  const auto n2 = static_cast<std::size_t>(B);
  const std::size_t n = n1 + n2;

  BigInt common = 1;
  for (const auto& v : samples) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den().get_mpz_t());

  std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n + 1));
  std::vector<std::int64_t> nodes;
  nodes.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::int64_t m = first + static_cast<std::int64_t>(r);
    nodes.push_back(m);
    const BigInt base(static_cast<long>(m));
    BigInt power = 1;
    for (std::size_t i = 0; i < std::max(n1, n2); ++i) {
      if (i < n1) rows[r][i] = power;
      if (i < n2) rows[r][n1 + i] = power * pow2(static_cast<std::uint64_t>(m));
      power *= base;
    }
    const Rational scaled = samples[r] * common;
    rows[r][n] = scaled.get_num();
  }

  auto solution = solve_fraction_free(std::move(rows));
  if (!solution) {
    throw SingularSystemError("mixed interpolation system is singular at nodes " + std::to_string(first) + ".." +
                                  std::to_string(last),
                              std::move(nodes));
  }
  for (auto& x : *solution) x /= common;
  ExpPolyForm form;
  form.p1 = RationalPoly(std::vector<Rational>(solution->begin(), solution->begin() + static_cast<std::ptrdiff_t>(n1)));
  form.p2 = RationalPoly(std::vector<Rational>(solution->begin() + static_cast<std::ptrdiff_t>(n1), solution->end()));
  return form;
}

std::vector<ScanCell> vanishing_scan(const Sequence& s, std::int64_t K, unsigned threads) {
  if (K < 2) throw DomainError("vanishing_scan needs K >= 2");
  std::vector<std::int64_t> points;
  for (std::int64_t a = s.start(); a + K * (a + 1) <= s.last(); ++a) points.push_back(a);

  std::vector<ScanCell> cells(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    const std::int64_t a = points[i];
    const std::int64_t n_lo = K * a;
    const std::int64_t n_hi = K * (a + 1);
    const auto values = mixed_diff_orders(s, a, n_lo, n_hi);
    ScanCell cell{a, true, {}};
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (values[j] != 0) {
        cell.satisfied = false;
        cell.witnesses.emplace_back(n_lo + static_cast<std::int64_t>(j), values[j]);
      }
    }
    cells[i] = std::move(cell);
  });
  return cells;
}

ClassificationReport classify(const Sequence& s, const ClassifyOptions& options) {
  if (options.K < 2) throw DomainError("classify needs K >= 2");
  ClassificationReport report;
  report.K_used = options.K;

  if (options.require_integer && !s.all_integer()) {
    report.verdict = Inconclusive{"non-integer samples with integrality required"};
    return report;
  }

  const std::int64_t first_cut = options.cut.value_or(s.start());
  if (!s.contains(first_cut)) {
    report.verdict = Inconclusive{"cut " + std::to_string(first_cut) + " outside the window"};
    return report;
  }

  if (s.last() >= first_cut + 2) {
    const auto polya = polya_reconstruct(s, first_cut);
    if (polya) {
      const RationalPoly& poly = *polya.poly;
      report.verdict = PolynomialVerdict{poly};
      report.cut = first_cut;
      report.verified_to = s.last();
      report.verified_from =
          extend_backward(s, first_cut, [&](std::int64_t a) { return poly(Rational(static_cast<long>(a))); });
      report.integral_coefficients = poly.has_integer_coefficients();
      return report;
    }
    const auto top = static_cast<std::int64_t>(polya.differences.size()) - 1;
    if (polya.failure == PolyaFailure::mismatch) {
      note_failure(report, options.max_failures, {FailureKind::polya, *polya.witness, 0, Rational(0)});
    } else {
      note_failure(report, options.max_failures,
                   {FailureKind::polya, first_cut, top, polya.differences[static_cast<std::size_t>(top)]});
    }
  }

  const auto cells = vanishing_scan(s, options.K, options.threads);
  const std::int64_t min_cut = std::max<std::int64_t>(first_cut, 1);
  for (const auto& cell : cells) {
    if (cell.a < min_cut || cell.satisfied) continue;
    for (const auto& [n, value] : cell.witnesses) {
      note_failure(report, options.max_failures, {FailureKind::vanishing, cell.a, n, value});
    }
  }

  // Earliest cut from which every coverable scan cell vanishes.
  std::optional<std::int64_t> cut;
  for (auto it = cells.rbegin(); it != cells.rend() && it->satisfied && it->a >= min_cut; ++it) cut = it->a;
  if (options.cut && cut && *cut != *options.cut) cut.reset();
  if (!cut) {
    report.verdict = Inconclusive{cells.empty() ? "window too short for the vanishing scan"
                                                : "mixed differences do not vanish on any tail of the scan"};
    return report;
  }

  ExpPolyForm form;
  try {
    form = expoly_fit(s, *cut, options.K);
  } catch (const SingularSystemError& e) {
    report.verdict = Inconclusive{e.what()};
    return report;
  }

  bool matches = true;
  for (std::int64_t m = *cut; m <= s.last(); ++m) {
    Rational residual = s.at(m) - form(m);
    if (residual != 0) {
      matches = false;
      note_failure(report, options.max_failures, {FailureKind::sample, m, 0, std::move(residual)});
    }
  }
  if (!matches) {
    report.verdict = Inconclusive{"fitted closed form disagrees with samples past the cut"};
    return report;
  }

  report.cut = cut;
  report.verified_to = s.last();
  report.verified_from = extend_backward(s, *cut, [&](std::int64_t a) { return form(a); });
  report.integral_coefficients = form.p1.has_integer_coefficients() && form.p2.has_integer_coefficients();
  report.failures.erase(std::remove_if(report.failures.begin(), report.failures.end(),
                                       [&](const FailureRecord& f) { return f.kind == FailureKind::sample; }),
                        report.failures.end());
  if (form.p2.is_zero()) {
    report.verdict = PolynomialVerdict{form.p1};
  } else {
    report.verdict = ExpPolyVerdict{std::move(form)};
  }
  return report;
}

}  // namespace intval
