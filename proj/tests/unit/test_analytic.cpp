#include <gtest/gtest.h>

#include <cmath>

#include "exact_oracles.hpp"
#include "intval/analytic.hpp"
#include "intval/diffcalc.hpp"
#include "intval/errors.hpp"
#include "numeric_oracles.hpp"

using namespace intval;

namespace {

using BP = BivariatePoly;

// Direct product expansion of G(k, x, y) without build_G.
BP product_G(std::int64_t a, std::int64_t k) {
  BP g = BP::constant(1);
  for (std::int64_t q = 0; q < a; ++q) {
    BP factor = q < k ? BP::constant(1) + BP::term(1, 1, 0) + BP::term(Rational(static_cast<long>(q)), 0, 1)
                      : BP::constant(1) + BP::term(Rational(static_cast<long>(-q)), 0, 1);
    g = g * factor;
  }
  return g;
}

double rel(long double a, long double b) { return static_cast<double>(std::fabs(a - b) / std::fabs(b)); }

}  // namespace

TEST(BuildG, Examples) {
  EXPECT_EQ(build_G(1, 0), BP::constant(1));
  EXPECT_EQ(build_G(2, 0), BP::constant(1) + BP::term(-1, 0, 1));
  EXPECT_EQ(build_G(2, 2).to_string(), "1 + y + 2*x + x*y + x^2");
  EXPECT_THROW(build_G(2, 3), DomainError);
}

TEST(DeltaAG, Examples) {
  EXPECT_EQ(delta_a_G(0), BP::constant(1));
  EXPECT_EQ(delta_a_G(1), BP::term(1, 1, 0));
  EXPECT_EQ(delta_a_G(2), BP::term(1, 2, 0) + BP::term(3, 1, 1) + BP::term(2, 0, 1));
  EXPECT_THROW(delta_a_G(-1), DomainError);
}

TEST(DeltaAG, MatchesAlternatingSumOfProducts) {
  for (std::int64_t a = 0; a <= 7; ++a) {
    BP sum;
    for (std::int64_t k = 0; k <= a; ++k) {
      const Rational sign = (a - k) % 2 == 0 ? 1 : -1;
      sum += product_G(a, k) * (sign * Rational(binomial(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(k))));
      ASSERT_EQ(build_G(a, k), product_G(a, k));
    }
    ASSERT_EQ(delta_a_G(a), sum) << a;
  }
}

TEST(DeltaAG, PointEvaluationAgreesWithDifferenceOperator) {
  // At fixed (x, y), k -> G(k, x, y) is a sequence and delta_a_G is its a-th
  // difference at 0.
  for (std::int64_t a = 1; a <= 6; ++a) {
    for (const auto& [x, y] : std::vector<std::pair<long, long>>{{1, 2}, {-3, 1}, {2, -5}}) {
      std::vector<Rational> values;
      for (std::int64_t k = 0; k <= a; ++k) values.push_back(build_G(a, k)(Rational(x), Rational(y)));
      const Sequence s(0, values);
      ASSERT_EQ(mixed_diff(s, {0, a}), delta_a_G(a)(Rational(x), Rational(y)));
    }
  }
}

TEST(VerifyABounds, SmallExamples) {
  const auto two = verify_A_bounds(2);
  EXPECT_TRUE(two.passed());
  EXPECT_EQ(two.terms, 3U);
  EXPECT_EQ(two.max_ratio, make_rational(1, 24));
  const auto one = verify_A_bounds(1);
  EXPECT_TRUE(one.passed());
  EXPECT_EQ(one.max_ratio, make_rational(1, 6));
  EXPECT_THROW(verify_A_bounds(0), DomainError);
}

TEST(VerifyABounds, SweepUpToTen) {
  for (std::int64_t a = 1; a <= 10; ++a) {
    const auto r = verify_A_bounds(a);
    ASSERT_TRUE(r.passed()) << a;
    const BigInt six_a = ipow(BigInt(6), static_cast<std::uint64_t>(a));
    for (const auto& [key, c] : delta_a_G(a).terms()) {
      ASSERT_GE(key.first + 2 * key.second, static_cast<std::uint32_t>(a));
      ASSERT_LE(abs(c), Rational(six_a * ipow(BigInt(a), key.second)));
    }
  }
}

TEST(Quadrature, AgreesWithSimpsonOracle) {
  const std::vector<std::array<int, 3>> cells{{8, 2, 0}, {8, 4, 3}, {16, 4, 2}, {16, 8, 8}, {4, 2, 2}};
  for (const auto& [n, s, mu] : cells) {
    const auto I = quad_I(n, s, mu);
    const auto J = quad_J(n, s, mu);
    EXPECT_LT(rel(std::stold(I.mid.to_string(25)), oracle::simpson_I(n, s, mu)), 1e-4) << n << " " << s << " " << mu;
    EXPECT_LT(rel(std::stold(J.mid.to_string(25)), oracle::simpson_J(n, s, mu)), 1e-4) << n << " " << s << " " << mu;
    EXPECT_GT(J.mid.sign(), 0);
  }
}

TEST(Quadrature, ExampleBounds) {
  EXPECT_TRUE(quad_I(8, 2, 0).upper() < 100L);
  const BigFloat bound = BigFloat(100L, Precision::digits(30)) * BigFloat(25L, Precision::digits(30)) *
                         BigFloat(25L, Precision::digits(30)) * BigFloat(25L, Precision::digits(30));
  EXPECT_TRUE(quad_J(16, 4, 2).upper() < bound);
}

TEST(Quadrature, DomainErrors) {
  EXPECT_THROW(quad_I(3, 2, 0), DomainError);
  EXPECT_THROW(quad_I(8, 1, 0), DomainError);
  EXPECT_THROW(quad_I(8, 5, 0), DomainError);
  EXPECT_THROW(quad_J(8, 2, 3), DomainError);
  EXPECT_THROW(verify_integral_bounds({3}), DomainError);
}

TEST(IntegralBounds, SmallSweepPasses) {
  const auto r = verify_integral_bounds({4, 8, 16});
  EXPECT_TRUE(r.passed());
  // n = 4: s = 2, mu in 0..2; n = 8: s = 2..4; n = 16: s = 2..8.
  std::size_t expected = 0;
  for (std::int64_t n : {4, 8, 16}) {
    for (std::int64_t s = 2; s <= n / 2; ++s) expected += static_cast<std::size_t>(s + 1);
  }
  EXPECT_EQ(r.cells.size(), expected);
  for (const auto& c : r.cells) {
    ASSERT_TRUE(c.I_ratio < 1L);
    ASSERT_TRUE(c.J_ratio < 1L);
  }

  IntegralBoundOptions single;
  single.s = 2;
  single.mu = 2;
  const auto one = verify_integral_bounds({4}, single);
  ASSERT_EQ(one.cells.size(), 1U);
  EXPECT_TRUE(one.cells[0].I_pass);
}

TEST(IntegralBounds, TinyConstantsFail) {
  IntegralBoundOptions o;
  o.d = 1;
  o.b = 1;
  const auto r = verify_integral_bounds({8}, o);
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.violations, 0U);
}

TEST(ErrorChain, Examples) {
  const auto two = error_chain_check(2, 8);
  EXPECT_TRUE(two.chain_valid);
  EXPECT_TRUE(two.ratio.lo() > BigFloat(std::string("0.812"), two.ratio.precision()));
  EXPECT_TRUE(two.ratio.hi() < BigFloat(std::string("0.8121"), two.ratio.precision()));
  ASSERT_TRUE(two.direct_cutoff);

  const auto three = error_chain_check(3, 6);
  const auto& row = three.rows.at(6);
  EXPECT_EQ(row.a, 6);
  // Closed form at (a, n) = (6, 12) is an independent witness of < 1/2.
  const double h = std::exp(-3.0);
  const double closed = std::pow(1 - h, 6) * std::pow(2 - h, 6) * std::pow(h, 6);
  EXPECT_LT(closed, 0.5);
  EXPECT_TRUE(row.max_abs < BigFloat(std::string("0.5"), row.max_abs.precision()));

  EXPECT_THROW(error_chain_check(1, 3), DomainError);
}

TEST(ErrorChain, DirectValuesAgreeWithClosedForm) {
  for (std::int64_t K : {2, 3, 4}) {
    const auto r = error_chain_check(K, 6);
    for (const auto& row : r.rows) {
      ASSERT_TRUE(row.max_rel_discrepancy < BigFloat(std::string("1e-30"), row.max_rel_discrepancy.precision()));
    }
  }
}

TEST(DecayExpPoly, Examples) {
  const auto r20 = decay_exppoly(20, 0, 3);
  EXPECT_TRUE(r20.closed_form_ok);
  EXPECT_EQ(r20.rows.front().a, 0);
  EXPECT_TRUE(r20.rows.front().max_abs > 0L);

  const auto r100 = decay_exppoly(100, 1, 8);
  EXPECT_TRUE(r100.closed_form_ok);
  ASSERT_TRUE(r100.C_star);
  EXPECT_TRUE(r100.decays());
  EXPECT_THROW(decay_exppoly(3, 1, 2), DomainError);
}

TEST(DecayExpPoly, ZeroOrderIsOne) {
  // a = 0, n = 0: no operators apply, so the value is g(0) = 1.
  const Sequence s(0, {1});
  EXPECT_EQ(mixed_diff(s, {0, 0}), 1);
}

TEST(DecayPoly, Examples) {
  const auto two = decay_poly(2, 1, 20);
  EXPECT_TRUE(two.eigen_ok);
  EXPECT_TRUE(two.hypothesis);
  EXPECT_TRUE(two.conclusion);
  const auto three = decay_poly(3, 2, 20);
  EXPECT_TRUE(three.conclusion);
  const auto five = decay_poly(5, 2, 20);
  EXPECT_TRUE(five.hypothesis);
  EXPECT_TRUE(five.conclusion);
  EXPECT_TRUE(five.margin > BigFloat(std::string("0.4816"), five.margin.precision()));
  EXPECT_TRUE(five.margin < BigFloat(std::string("0.4818"), five.margin.precision()));
  EXPECT_TRUE(five.consistent());

  const auto big = decay_poly(7, 1, 10);
  EXPECT_FALSE(big.hypothesis);
  EXPECT_TRUE(big.consistent());
  EXPECT_THROW(decay_poly(1, 1, 10), DomainError);
}
