#include "intval/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "intval/errors.hpp"

namespace intval {
namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<BigFloat, BigFloat> legendre(std::size_t n, const BigFloat& x) {
  const Precision p = x.precision();
  BigFloat prev(1L, p);
  BigFloat cur = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const auto kk = static_cast<long>(k);
    BigFloat next = (x * cur * (2 * kk - 1) - prev * (kk - 1)) / kk;
    prev = std::move(cur);
    cur = std::move(next);
  }
  const auto nn = static_cast<long>(n);
  BigFloat derivative = (x * cur - prev) * nn / (x * x - 1L);
  return {std::move(cur), std::move(derivative)};
}

struct Piece {
  BigFloat value;
  BigFloat error;
};

}  // namespace

GaussLegendre::GaussLegendre(std::size_t order, Precision precision) {
  if (order < 2) throw DomainError("Gauss-Legendre order must be >= 2");
  const Precision work{precision.bits + 32};
  BigFloat tolerance(1L, work);
  mpfr_mul_2si(tolerance.get(), tolerance.get(), -(precision.bits + 8), MPFR_RNDN);

  for (std::size_t i = 1; i <= order; ++i) {
    const double guess = std::cos(std::numbers::pi * (static_cast<double>(i) - 0.25) / (static_cast<double>(order) + 0.5));
    BigFloat x(guess, work);
    BigFloat derivative(work);
    for (int iter = 0; iter < 200; ++iter) {
      auto [value, slope] = legendre(order, x);
      BigFloat step = value / slope;
      x -= step;
      derivative = std::move(slope);
      if (abs(step) < tolerance) break;
    }
    derivative = legendre(order, x).second;
    BigFloat weight = BigFloat(2L, work) / ((BigFloat(1L, work) - x * x) * derivative * derivative);
    nodes_.push_back(x.with_precision(precision));
    weights_.push_back(weight.with_precision(precision));
  }
}

BigFloat GaussLegendre::apply(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& a,
                              const BigFloat& b) const {
  const BigFloat half_width = (b - a) / 2L;
  const BigFloat center = (a + b) / 2L;
  BigFloat sum(a.precision());
  for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(center + half_width * nodes_[i]);
  return sum * half_width;
}

HighPrecisionValue integrate(const std::function<BigFloat(const BigFloat&)>& f, const std::vector<BigFloat>& breaks,
                             const QuadratureOptions& options) {
  if (breaks.size() < 2) throw DomainError("integration needs at least two break points");
  const GaussLegendre rule(options.order, options.precision);
  const BigFloat rel_tol(options.relative_tolerance, options.precision);

  // Whole-range estimate fixes the absolute tolerance shared by all pieces.
  BigFloat rough(options.precision);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) rough += rule.apply(f, breaks[i], breaks[i + 1]);
  const BigFloat total_tol = abs(rough) * rel_tol;
  const BigFloat full_span = breaks.back() - breaks.front();

  std::function<Piece(const BigFloat&, const BigFloat&, const BigFloat&, unsigned)> refine =
      [&](const BigFloat& a, const BigFloat& b, const BigFloat& whole, unsigned depth) -> Piece {
    const BigFloat mid = (a + b) / 2L;
    BigFloat left = rule.apply(f, a, mid);
    BigFloat right = rule.apply(f, mid, b);
    BigFloat halves = left + right;
    BigFloat error = abs(halves - whole);
    const BigFloat share = total_tol * ((b - a) / full_span);
    if (error <= share || depth >= options.max_depth) return {std::move(halves), std::move(error)};
    Piece l = refine(a, mid, left, depth + 1);
    Piece r = refine(mid, b, right, depth + 1);
    return {l.value + r.value, l.error + r.error};
  };

  HighPrecisionValue out{BigFloat(options.precision), BigFloat(options.precision)};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const BigFloat whole = rule.apply(f, breaks[i], breaks[i + 1]);
    Piece piece = refine(breaks[i], breaks[i + 1], whole, 0);
    out.mid += piece.value;
    out.radius += piece.error;
  }
  return out;
}

}  // namespace intval
