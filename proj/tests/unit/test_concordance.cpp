#include <gtest/gtest.h>

#include <algorithm>

#include "exact_oracles.hpp"
#include "generators.hpp"
#include "intval/concordance.hpp"
#include "intval/diffcalc.hpp"
#include "intval/errors.hpp"
#include "intval/primes.hpp"

using namespace intval;

namespace {

RationalPoly P(std::vector<Rational> c) { return RationalPoly(std::move(c)); }

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Sequence sample(const RationalPoly& p, std::int64_t start, std::int64_t last) {
  std::vector<Rational> v;
  for (std::int64_t a = start; a <= last; ++a) v.push_back(p(Rational(static_cast<long>(a))));
  return Sequence(start, v);
}

Sequence powers(long base, std::int64_t start, std::int64_t last) {
  std::vector<Rational> v;
  for (std::int64_t a = start; a <= last; ++a) v.emplace_back(ipow(BigInt(base), static_cast<std::uint64_t>(a)));
  return Sequence(start, v);
}

// Pairwise check: m1 - m2 divides f(m1) - f(m2).
bool pairwise_divisible(const Sequence& s, std::int64_t m1, std::int64_t m2) {
  const BigInt diff = s.at(m1).get_num() - s.at(m2).get_num();
  return diff % BigInt(m1 - m2) == 0;
}

}  // namespace

TEST(IntInterpolable, Examples) {
  const std::vector<std::int64_t> n012{0, 1, 2};
  const auto a = int_interpolable(n012, ints({0, 1, 0}));
  EXPECT_TRUE(a.integral);
  EXPECT_EQ(a.poly, P({0, 2, -1}));

  const std::vector<std::int64_t> n024{0, 2, 4};
  const auto b = int_interpolable(n024, ints({0, 2, 0}));
  EXPECT_FALSE(b.integral);
  EXPECT_EQ(b.poly, P({0, 2, parse_rational("-1/2")}));
  EXPECT_FALSE(oracle::brute_force_zx(n024, {0, 2, 0}, 50));

  const std::vector<std::int64_t> n55{5, 5};
  const auto c = int_interpolable(n55, ints({3, 3}));
  EXPECT_TRUE(c.integral);
  EXPECT_EQ(c.poly, RationalPoly::constant(3));

  const auto d = int_interpolable(n55, ints({3, 4}));
  EXPECT_FALSE(d.integral);
  EXPECT_EQ(d.conflict, 5);

  EXPECT_THROW(int_interpolable(n012, ints({1, 2})), InputError);
}

TEST(IntInterpolable, AgreesWithBruteForceAndDividedDifferences) {
  gen::Gen g(500);
  int decided = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    std::vector<std::int64_t> nodes;
    const auto count = g.integer(1, 4);
    while (static_cast<std::int64_t>(nodes.size()) < count) {
      const auto m = g.integer(0, 8);
      if (std::find(nodes.begin(), nodes.end(), m) == nodes.end()) nodes.push_back(m);
    }
    std::vector<std::int64_t> values;
    if (g.coin()) {
      const auto p = g.integer_poly(g.integer(0, 3), 10);
      for (auto m : nodes) values.push_back(p(Rational(static_cast<long>(m))).get_num().get_si());
    } else {
      for (std::size_t i = 0; i < nodes.size(); ++i) values.push_back(g.integer(-20, 20));
    }
    const std::vector<BigInt> big(values.begin(), values.end());
    const auto r = int_interpolable(nodes, big);
    ASSERT_EQ(r.integral, integral_divided_differences(nodes, big));
    const auto brute = oracle::brute_force_zx(nodes, values, 50);
    if (!r.integral) {
      ASSERT_FALSE(brute);
      ++decided;
      continue;
    }
    bool in_range = true;
    for (const auto& c : r.poly.coefficients()) in_range = in_range && abs(c) <= 50;
    if (in_range) {
      ASSERT_TRUE(brute);
      ++decided;
    }
  }
  EXPECT_GE(decided, 500);
}

TEST(IntInterpolable, SubsetMonotonicity) {
  gen::Gen g(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> nodes;
    for (std::int64_t m = 0; m < 10; ++m) {
      if (g.coin()) nodes.push_back(m);
    }
    if (nodes.size() < 2) continue;
    std::vector<BigInt> values;
    for (std::size_t i = 0; i < nodes.size(); ++i) values.emplace_back(g.integer(-30, 30));
    if (!int_interpolable(nodes, values).integral) continue;
    nodes.pop_back();
    values.pop_back();
    ASSERT_TRUE(int_interpolable(nodes, values).integral);
  }
}

TEST(ConcordanceScan, BinomialTwoFailsAtTwoFour) {
  const auto s = sample(P({0, parse_rational("-1/2"), parse_rational("1/2")}), 2, 8);
  const auto v = concordance_scan(s, 1, 2, 8);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(v.counterexample->nodes, (std::vector<std::int64_t>{2, 4}));
  EXPECT_EQ(v.counterexample->values, ints({1, 6}));
  EXPECT_FALSE(v.counterexample->poly.has_integer_coefficients());
  EXPECT_FALSE(pairwise_divisible(s, 4, 2));
  EXPECT_EQ(v.tuples_checked, 21U);
}

TEST(ConcordanceScan, PowersOfTwoWitnesses) {
  const auto s = powers(2, 1, 6);
  const auto v = concordance_scan(s, 1, 1, 6);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(v.counterexample->nodes, (std::vector<std::int64_t>{1, 4}));
  EXPECT_FALSE(pairwise_divisible(s, 4, 1));
  EXPECT_FALSE(pairwise_divisible(s, 5, 1));
  const auto has_15 = std::any_of(v.witnesses.begin(), v.witnesses.end(), [](const auto& w) {
    return w.nodes == std::vector<std::int64_t>{1, 5};
  });
  EXPECT_TRUE(has_15);
}

TEST(ConcordanceScan, PairwiseScanMatchesDivisibility) {
  gen::Gen g(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> v;
    for (int i = 0; i < 12; ++i) v.emplace_back(g.integer(-50, 50));
    const Sequence s(0, v);
    ConcordanceOptions o;
    o.max_witnesses = 1000;
    const auto r = concordance_scan(s, 1, 0, 11, o);
    std::size_t failing = 0;
    for (std::int64_t m1 = 0; m1 <= 11; ++m1) {
      for (std::int64_t m2 = m1 + 1; m2 <= 11; ++m2) failing += pairwise_divisible(s, m2, m1) ? 0 : 1;
    }
    const std::size_t reported = r.counterexample ? 1 + r.witnesses.size() : 0;
    ASSERT_EQ(reported, failing);
    ASSERT_EQ(r.holds, failing == 0);
  }
}

TEST(ConcordanceScan, IntegerPolynomialsAlwaysHold) {
  gen::Gen g(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = g.integer_poly(g.integer(0, 6), 20);
    const auto s = sample(p, 0, 12);
    for (std::int64_t k = 0; k <= 4; ++k) {
      const auto v = concordance_scan(s, k, 0, 12);
      ASSERT_TRUE(v.holds);
      ASSERT_EQ(v.mode, ScanMode::exhaustive);
      ASSERT_EQ(v.tuples_checked, static_cast<std::uint64_t>(binomial(13, static_cast<std::uint64_t>(k + 1)).get_ui()));
    }
  }
}

TEST(ConcordanceScan, ThreadsAndSamplingAreDeterministic) {
  const auto s = powers(3, 0, 50);
  ConcordanceOptions one;
  one.threads = 1;
  ConcordanceOptions many;
  many.threads = 4;
  const auto a = concordance_scan(s, 2, 0, 20, one);
  const auto b = concordance_scan(s, 2, 0, 20, many);
  EXPECT_EQ(a.tuples_checked, b.tuples_checked);
  ASSERT_TRUE(a.counterexample && b.counterexample);
  EXPECT_EQ(a.counterexample->nodes, b.counterexample->nodes);

  ConcordanceOptions sampled;
  sampled.mode = ScanMode::sampled;
  sampled.samples = 2000;
  sampled.seed = 42;
  const auto x = concordance_scan(s, 3, 0, 50, sampled);
  const auto y = concordance_scan(s, 3, 0, 50, sampled);
  EXPECT_EQ(x.mode, ScanMode::sampled);
  EXPECT_EQ(x.tuples_checked, 2000U);
  ASSERT_TRUE(x.counterexample && y.counterexample);
  EXPECT_EQ(x.counterexample->nodes, y.counterexample->nodes);

  EXPECT_EQ(concordance_scan(s, 1, 0, 50).mode, ScanMode::sampled);
}

TEST(ConcordanceScan, Errors) {
  const Sequence rational(0, {parse_rational("1/2"), 1, 2});
  EXPECT_THROW(concordance_scan(rational, 1, 0, 2), InputError);
  const auto s = powers(2, 0, 5);
  EXPECT_THROW(concordance_scan(s, 3, 0, 2), InputError);
  EXPECT_THROW(concordance_scan(s, 1, 0, 9), InsufficientDataError);
}

TEST(Cmain, Examples) {
  EXPECT_EQ(cmain_first(3, 2, 1), -54);
  EXPECT_EQ(cmain_first(2, 1, 0), 2);
  EXPECT_EQ(cmain_first(3, 1, 5), -243);
  EXPECT_EQ(cmain_second(3, 2, 2, 0), 9);
  EXPECT_EQ(cmain_second(3, 1, 1, 0), 3);
  EXPECT_EQ(cmain_second(5, 1, 4, 0), 5);
  EXPECT_THROW(cmain_first(4, 1, 0), DomainError);
  EXPECT_THROW(cmain_first(3, 0, 0), DomainError);
  EXPECT_THROW(cmain_second(3, 1, 0, 0), DomainError);
  EXPECT_THROW(cmain_second(3, 1, 3, 0), DomainError);
}

TEST(Cmain, DirectSumOracleAndDivisibility) {
  // Independent evaluation from Pascal rows and plain powers.
  const auto rows = oracle::pascal(40);
  for (std::uint64_t p : {2U, 3U, 5U, 7U}) {
    for (std::uint64_t k = 1; k * p <= 40 && k <= 5; ++k) {
      const BigInt pk = ipow(BigInt(p), k);
      for (std::uint64_t l = 0; l <= 6; ++l) {
        BigInt first = 0;
        for (std::uint64_t j = 0; j <= k; ++j) {
          BigInt power = 1;
          for (std::uint64_t e = 0; e < l; ++e) power *= j * p;
          const BigInt term = rows[k * p][j * p] * power;
          first += (j * p) % 2 == 1 ? BigInt(-term) : term;
        }
        ASSERT_EQ(cmain_first(p, k, l), first);
        ASSERT_EQ(first % pk, 0);
        for (std::uint64_t i = 1; i < p; ++i) {
          BigInt second = 0;
          for (std::uint64_t j = 0; j < k; ++j) {
            BigInt power = 1;
            for (std::uint64_t e = 0; e < l; ++e) power *= j * p + i;
            const BigInt term = rows[k * p][j * p + i] * power;
            second += (j * p) % 2 == 1 ? BigInt(-term) : term;
          }
          ASSERT_EQ(cmain_second(p, k, i, l), second);
          ASSERT_EQ(second % pk, 0);
        }
      }
    }
  }
}

TEST(Primes, SieveAgreesWithTrialDivision) {
  const auto ps = primes_up_to(500);
  std::vector<std::uint64_t> slow;
  for (std::uint64_t n = 0; n <= 500; ++n) {
    if (oracle::slow_is_prime(n)) slow.push_back(n);
    ASSERT_EQ(is_prime(n), oracle::slow_is_prime(n)) << n;
  }
  EXPECT_EQ(ps, slow);
}

TEST(PrimorialDivisor, Examples) {
  EXPECT_EQ(primorial_divisor(6, 2), 180);
  EXPECT_EQ(primorial_divisor(1, 1), 1);
  EXPECT_EQ(primorial_divisor(10, 1), 210);
  EXPECT_THROW(primorial_divisor(0, 1), DomainError);
  EXPECT_THROW(primorial_divisor(5, 0), DomainError);
}

TEST(PrimorialDivisor, MatchesDoubleProduct) {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::uint64_t k = 1; k <= 4; ++k) {
      BigInt expected = 1;
      for (std::uint64_t l = 1; l <= k; ++l) {
        for (std::uint64_t p = 2; p <= n / l; ++p) {
          if (oracle::slow_is_prime(p)) expected *= p;
        }
      }
      ASSERT_EQ(primorial_divisor(n, k), expected) << n << "," << k;
    }
  }
}

TEST(DeltaCongruence, Examples) {
  const auto f = sample(P({1, 0, 3, 0, 0, 0, 0, 1}), 0, 10);
  EXPECT_TRUE(delta_congruence_check(f, 2, 3, 0, 4).empty());

  const auto six = sample(RationalPoly::monomial(1, 6), 0, 5);
  EXPECT_EQ(mixed_diff(six, {0, 5}), 1800);
  EXPECT_EQ(oracle::factorial(5) * oracle::stirling2(6, 5), 1800);
  EXPECT_TRUE(delta_congruence_check(six, 1, 5, 0, 0).empty());

  const auto two = powers(2, 0, 3);
  const auto v = delta_congruence_check(two, 1, 3, 0, 0);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].a, 0);
  EXPECT_EQ(v[0].n, 3);
  EXPECT_EQ(v[0].value, 1);

  EXPECT_THROW(delta_congruence_check(two, 1, 4, 0, 0), DomainError);
  EXPECT_THROW(delta_congruence_check(two, 1, 3, 0, 1), InsufficientDataError);
}

TEST(GapCheck, Examples) {
  gen::Gen g(9);
  const auto p = g.integer_poly(9, 10);
  EXPECT_TRUE(gap_check(sample(p, 0, 17), 2, 1, 12, 0, 5).empty());

  const auto two = powers(2, 0, 4);
  const auto v = gap_check(two, 1, 4, 4, 0, 0);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].value, 1);
  EXPECT_EQ(v[0].divisor, 6);

  const auto zero = sample(P({}), 0, 30);
  EXPECT_TRUE(gap_check(zero, 3, 1, 20, 0, 10).empty());
}

TEST(Congruences, RandomIntegerPolynomials) {
  gen::Gen g(2024);
  for (int trial = 0; trial < 20; ++trial) {
    for (auto [k, prime] : std::vector<std::pair<std::int64_t, std::uint64_t>>{{1, 3}, {2, 5}, {3, 2}}) {
      const auto deg = static_cast<std::int64_t>(k * static_cast<std::int64_t>(prime) + 3);
      const auto f = sample(g.integer_poly(deg, 100), 0, 40);
      ASSERT_TRUE(delta_congruence_check(f, k, prime, 0, 10).empty());
      ASSERT_TRUE(gap_check(f, k, 1, 20, 0, 10).empty());
    }
  }
}

TEST(GrowthThreshold, EnclosesSeriesOracle) {
  const auto t0 = growth_threshold(0);
  EXPECT_TRUE(t0.contains(Rational(2)));
  for (unsigned k = 1; k <= 6; ++k) {
    mpq_class gamma = 0;
    for (unsigned i = 1; i <= k; ++i) gamma += mpq_class(1, i);
    gamma.canonicalize();
    auto [lo, hi] = oracle::exp_enclosure(gamma, 80);
    const auto t = growth_threshold(k);
    // Both enclosures of e^gamma + 1 must overlap, and ours is at least
    // 30 digits tight.
    EXPECT_TRUE(t.lo() <= BigFloat(Rational(hi + 1), t.precision()));
    EXPECT_TRUE(t.hi() >= BigFloat(Rational(lo + 1), t.precision()));
    const BigFloat width = t.hi() - t.lo();
    EXPECT_TRUE(width < t.lo() * BigFloat(std::string("1e-30"), t.precision())) << k;
  }
  const auto e1 = growth_threshold(1);
  EXPECT_TRUE(e1.lo() > BigFloat(std::string("3.71828182845904523536028747135"), e1.precision()));
  EXPECT_TRUE(e1.hi() < BigFloat(std::string("3.71828182845904523536028747136"), e1.precision()));
}
