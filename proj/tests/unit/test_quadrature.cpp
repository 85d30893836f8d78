#include <gtest/gtest.h>

#include "intval/quadrature.hpp"

using namespace intval;

namespace {

const Precision kP = Precision::digits(40);

BigFloat num(const char* s) { return BigFloat(std::string(s), kP); }

bool close(const BigFloat& a, const BigFloat& b, const char* tol) {
  BigFloat d = a - b;
  if (d.sign() < 0) d = BigFloat(0L, kP) - d;
  return d < num(tol) * (b.sign() < 0 ? BigFloat(0L, kP) - b : b);
}

}  // namespace

TEST(GaussLegendre, ExactUpToDegreeTwiceOrderMinusOne) {
  const GaussLegendre rule(10, kP);
  const auto power = [](int m) {
    return [m](const BigFloat& x) {
      BigFloat p(1L, kP);
      for (int i = 0; i < m; ++i) p *= x;
      return p;
    };
  };
  const BigFloat zero(0L, kP), one(1L, kP);
  EXPECT_TRUE(close(rule.apply(power(19), zero, one), BigFloat(Rational(1, 20), kP), "1e-35"));
  EXPECT_FALSE(close(rule.apply(power(20), zero, one), BigFloat(Rational(1, 21), kP), "1e-35"));
}

TEST(Integrate, KnownIntegrals) {
  QuadratureOptions o;
  o.precision = kP;
  o.relative_tolerance = 1e-20;
  const auto e = integrate([](const BigFloat& x) { return exp(x); }, {BigFloat(0L, kP), BigFloat(1L, kP)}, o);
  EXPECT_TRUE(close(e.mid, exp(BigFloat(1L, kP)) - 1L, "1e-20"));

  // int_0^pi sin = 2, split at pi/2.
  const auto pi = BigFloat::pi(kP);
  const auto s = integrate([](const BigFloat& x) { return sin(x); }, {BigFloat(0L, kP), pi / 2L, pi}, o);
  EXPECT_TRUE(close(s.mid, BigFloat(2L, kP), "1e-20"));

  // The unbounded derivative at 0 forces bisection.
  QuadratureOptions loose = o;
  loose.relative_tolerance = 1e-12;
  loose.max_depth = 60;
  const auto root = integrate([](const BigFloat& x) { return sqrt(x); }, {BigFloat(0L, kP), BigFloat(1L, kP)}, loose);
  EXPECT_TRUE(close(root.mid, BigFloat(Rational(2, 3), kP), "1e-11"));
  EXPECT_TRUE(root.radius.sign() >= 0);
}
