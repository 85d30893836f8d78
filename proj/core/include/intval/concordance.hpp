#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intval/interval.hpp"
#include "intval/polynomial.hpp"
#include "intval/rational.hpp"
#include "intval/sequence.hpp"

namespace intval {

struct InterpolationResult {
  bool integral = false;
  // Unique interpolant of degree < number of distinct nodes. Empty when the
  // nodes conflict.
  RationalPoly poly;
  // A node listed twice with different values.
  std::optional<std::int64_t> conflict;
};

// Is there P in Z[X] with P(nodes[i]) = values[i] for all i? After merging
// repeated nodes, the answer is the integrality of the unique low-degree
// interpolant: any P in Z[X] reduces modulo the monic integer polynomial
// prod (X - m_i) to an integer polynomial of that degree taking the same
// values. Throws InputError on mismatched lengths.
InterpolationResult int_interpolable(std::span<const std::int64_t> nodes, std::span<const BigInt> values);

// Same decision on distinct nodes through Newton divided differences: the
// Newton basis prod_{i<j}(X - m_i) is unitriangular over Z against the
// monomials, so the interpolant is integral iff every divided difference is.
bool integral_divided_differences(std::span<const std::int64_t> nodes, std::span<const BigInt> values);

enum class ScanMode { automatic, exhaustive, sampled };

struct ConcordanceOptions {
  // automatic switches to sampling for windows wider than 40.
  ScanMode mode = ScanMode::automatic;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::size_t max_witnesses = 64;
};

struct ConcordanceCounterexample {
  std::vector<std::int64_t> nodes;
  std::vector<BigInt> values;
  // Interpolant coefficients, at least one of which is not an integer.
  RationalPoly poly;
};

struct ConcordanceVerdict {
  std::int64_t k = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool holds = true;
  // exhaustive or sampled; never automatic.
  ScanMode mode = ScanMode::exhaustive;
  std::uint64_t tuples_checked = 0;
  // First failing tuple in lexicographic order among those checked.
  std::optional<ConcordanceCounterexample> counterexample;
  // Further failing tuples in the same order, capped by max_witnesses.
  std::vector<ConcordanceCounterexample> witnesses;
};

// Tests every (k+1)-subset of [lo, hi] for integer interpolability. Tuples
// with repeated nodes need no separate pass: they merge to a smaller distinct
// set, which is interpolable whenever any distinct superset is. Throws
// InputError for non-integer samples or hi - lo < k, InsufficientDataError if
// the sequence misses part of [lo, hi].
ConcordanceVerdict concordance_scan(const Sequence& s, std::int64_t k, std::int64_t lo, std::int64_t hi,
                                    const ConcordanceOptions& options = {});

// sum_{j=0}^{k} (-1)^(jp) C(kp, jp) (jp)^l, with 0^0 = 1.
// Throws DomainError unless p is prime and k >= 1.
BigInt cmain_first(std::uint64_t p, std::uint64_t k, std::uint64_t l);

// sum_{j=0}^{k-1} (-1)^(jp) C(kp, jp+i) (jp+i)^l.
// Throws DomainError unless p is prime, k >= 1 and 1 <= i <= p-1.
BigInt cmain_second(std::uint64_t p, std::uint64_t k, std::uint64_t i, std::uint64_t l);

struct CongruenceViolation {
  std::int64_t a;
  std::int64_t n;
  BigInt value;
};

// Every a in [a_lo, a_hi] with p^k not dividing Δ^(kp) f(a).
// Throws InputError for non-integer samples, DomainError for non-prime p or
// k < 1, InsufficientDataError if [a_lo, a_hi + kp] is not covered.
std::vector<CongruenceViolation> delta_congruence_check(const Sequence& s, std::int64_t k, std::uint64_t p,
                                                        std::int64_t a_lo, std::int64_t a_hi);

struct GapViolation {
  std::int64_t a;
  std::int64_t n;
  BigInt value;
  BigInt divisor;
};

// Every (a, n) with Δ^n f(a) nonzero and not divisible by
// primorial_divisor(n, k). Same errors as delta_congruence_check; needs n >= 1.
std::vector<GapViolation> gap_check(const Sequence& s, std::int64_t k, std::int64_t n_lo, std::int64_t n_hi,
                                    std::int64_t a_lo, std::int64_t a_hi);

// Enclosure of e^(1 + 1/2 + ... + 1/k) + 1 with at least `digits` correct
// significant digits. k = 0 gives exactly 2.
Interval growth_threshold(std::uint64_t k, unsigned digits = 30);

}  // namespace intval
