#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "intval/bigfloat.hpp"

namespace intval {

// Gauss-Legendre rule on [-1, 1] with nodes computed by Newton iteration at
// the requested precision.
class GaussLegendre {
 public:
  GaussLegendre(std::size_t order, Precision precision);

  std::size_t order() const noexcept { return nodes_.size(); }
  // Rule applied to f on [a, b].
  BigFloat apply(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& a, const BigFloat& b) const;

 private:
  std::vector<BigFloat> nodes_;
  std::vector<BigFloat> weights_;
};

struct QuadratureOptions {
  Precision precision = Precision::digits(60);
  double relative_tolerance = 1e-6;
  std::size_t order = 20;
  // Bisection depth limit per initial piece.
  unsigned max_depth = 30;
};

// Adaptive bisection over the pieces [breaks[0], breaks[1]], ... Each piece
// is accepted once the rule on it agrees with the rule on its two halves to
// within its share of the tolerance; the radius is the sum of those
// disagreements, an estimate rather than a rigorous bound.
HighPrecisionValue integrate(const std::function<BigFloat(const BigFloat&)>& f, const std::vector<BigFloat>& breaks,
                             const QuadratureOptions& options = {});

}  // namespace intval
