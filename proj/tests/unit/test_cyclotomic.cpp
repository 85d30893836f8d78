#include <gtest/gtest.h>

#include <cmath>

#include "exact_oracles.hpp"
#include "generators.hpp"
#include "intval/cyclotomic.hpp"
#include "intval/errors.hpp"
#include "intval/primes.hpp"
#include "numeric_oracles.hpp"

using namespace intval;

namespace {

std::vector<long double> as_long_double(const CycloElement& e) {
  std::vector<long double> out;
  for (const auto& c : e.coefficients()) out.push_back(c.get_d());
  return out;
}

CycloElement one_minus_zeta(std::uint64_t p) { return CycloElement::one(p) - CycloElement::zeta_power(p, 1); }

}  // namespace

TEST(CycloElement, Construction) {
  EXPECT_THROW(CycloElement(2), DomainError);
  EXPECT_THROW(CycloElement(9), DomainError);
  const CycloElement z(3);
  EXPECT_TRUE(z.is_zero());
  // 1 + zeta + zeta^2 = 0
  EXPECT_TRUE(CycloElement(3, {1, 1, 1}).is_zero());
  EXPECT_EQ(CycloElement::zeta_power(5, 5), CycloElement::one(5));
  EXPECT_EQ(CycloElement::zeta_power(5, -1), CycloElement::zeta_power(5, 4));
  EXPECT_THROW(CycloElement(3) + CycloElement(5), DomainError);
}

TEST(CycloElement, RingLawsOnRandomElements) {
  gen::Gen g(5);
  for (std::uint64_t p : {3U, 5U, 7U, 11U}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto rnd = [&] {
        std::vector<BigInt> c;
        for (std::uint64_t i = 0; i < p + 3; ++i) c.emplace_back(g.integer(-9, 9));
        return CycloElement(p, c);
      };
      const auto a = rnd(), b = rnd(), c = rnd();
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a.pow(3), a * a * a);
      ASSERT_EQ(cyclo_trace(a + b), cyclo_trace(a) + cyclo_trace(b));
      const long double numeric = oracle::embedding_trace(as_long_double(a * b), static_cast<unsigned>(p));
      ASSERT_EQ(cyclo_trace(a * b), BigInt(static_cast<long>(std::llround(numeric))));
    }
  }
}

TEST(CycloTrace, Examples) {
  EXPECT_EQ(cyclo_trace(CycloElement::one(3)), 2);
  EXPECT_EQ(cyclo_trace(CycloElement::zeta_power(3, 1)), -1);
  const auto sq = one_minus_zeta(3).pow(2);
  EXPECT_EQ(cyclo_trace(sq), 3);
  EXPECT_EQ(std::llround(oracle::embedding_trace(as_long_double(sq), 3)), 3);
}

TEST(TraceIdentity, Examples) {
  const auto a = trace_identity(3, 2, 0);
  EXPECT_EQ(a.field_trace, 3);
  EXPECT_EQ(a.rhs, 3);
  EXPECT_TRUE(trace_identity_check(3, 2, 0));

  const auto b = trace_identity(5, 0, 0);
  EXPECT_EQ(b.field_trace, 4);
  EXPECT_EQ(b.orbit_sum, 5);
  EXPECT_EQ(b.group_ring_sum, 5);
  EXPECT_EQ(b.rhs, 5);
  EXPECT_TRUE(trace_identity_check(5, 0, 0));

  EXPECT_TRUE(trace_identity_check(3, 4, -2));
  EXPECT_THROW(trace_identity(3, 1, -3), DomainError);
}

TEST(TraceIdentity, FullGridAgainstNumericEmbeddings) {
  for (std::uint64_t p : {3U, 5U, 7U, 11U, 13U}) {
    for (std::uint64_t M = 0; M <= 25; ++M) {
      for (std::int64_t t = 1 - static_cast<std::int64_t>(p); t <= static_cast<std::int64_t>(M); ++t) {
        const auto id = trace_identity(p, M, t);
        ASSERT_EQ(id.orbit_sum, id.rhs) << p << " " << M << " " << t;
        ASSERT_EQ(id.group_ring_sum, id.rhs);
        ASSERT_EQ(id.orbit_sum - id.field_trace, M == 0 ? 1 : 0);
        if (M <= 10) {
          const auto e = CycloElement::zeta_power(p, t) * one_minus_zeta(p).pow(M);
          const long double numeric = oracle::embedding_trace(as_long_double(e), static_cast<unsigned>(p));
          ASSERT_EQ(id.field_trace, BigInt(static_cast<long>(std::llround(numeric))));
        }
      }
    }
  }
}

TEST(PpWitness, Examples) {
  EXPECT_EQ(pp_witness(3), CycloElement::zeta_power(3, 1) * BigInt(-1));
  EXPECT_EQ(pp_witness(3).to_string(), "-z");
  for (std::uint64_t p = 3; p <= 31; ++p) {
    if (!oracle::slow_is_prime(p)) continue;
    const auto y = pp_witness(p);
    ASSERT_EQ(y * BigInt(static_cast<long>(p)), one_minus_zeta(p).pow(p - 1)) << p;
  }
}

TEST(CycloElement, DivideExact) {
  const auto e = CycloElement(5, {2, 4, 6});
  EXPECT_EQ(e.divide_exact(2), CycloElement(5, {1, 2, 3}));
  EXPECT_THROW(e.divide_exact(4), DomainError);
}
