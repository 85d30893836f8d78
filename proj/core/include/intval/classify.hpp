#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "intval/polynomial.hpp"
#include "intval/rational.hpp"
#include "intval/sequence.hpp"

namespace intval {

// x -> p1(x) + p2(x) * 2^x
struct ExpPolyForm {
  RationalPoly p1;
  RationalPoly p2;

  Rational operator()(std::int64_t a) const;
  friend bool operator==(const ExpPolyForm&, const ExpPolyForm&) = default;
};

// Exact p1(a) + p2(a) * 2^a for a >= 0.
Rational eval_expoly(const ExpPolyForm& form, std::int64_t a);

// Samples `form` at start, ..., start + length - 1.
Sequence synthesize(const ExpPolyForm& form, std::int64_t start, std::size_t length);

enum class PolyaFailure {
  none,
  no_vanishing_tail,  // every difference Δ^j f(B) up to the window's reach is nonzero at the top order
  mismatch,           // the reconstructed polynomial disagrees with a sample
};

struct PolyaResult {
  std::optional<RationalPoly> poly;
  PolyaFailure failure = PolyaFailure::none;
  // Index of the first disagreeing sample for PolyaFailure::mismatch.
  std::optional<std::int64_t> witness;
  // Differences Δ^j f(B), j = 0, ..., last - B.
  std::vector<Rational> differences;

  explicit operator bool() const noexcept { return poly.has_value(); }
};

// Newton reconstruction from the cut B: finds the smallest d with
// Δ^(d+1) f(B), ..., Δ^(last-B) f(B) all zero, expands
// sum_{j<=d} Δ^j f(B) * C(x-B, j) to the monomial basis and checks it against
// every sample in [B, last]. Needs last >= B + 2 (InsufficientDataError).
PolyaResult polya_reconstruct(const Sequence& s, std::int64_t B);

// Solves the KB x KB system matching f at m = B, ..., KB + B - 1 in the basis
// {x^i : i < (K-1)B} u {x^j 2^x : j < B} by fraction-free elimination.
// Throws InsufficientDataError if the window misses a node, DomainError for
// B < 1 or K < 2, SingularSystemError (with the node list) if the system has
// no unique solution.
ExpPolyForm expoly_fit(const Sequence& s, std::int64_t B, std::int64_t K);

struct ScanCell {
  std::int64_t a;
  bool satisfied;
  // (n, value) for every n in [Ka, K(a+1)] with a nonzero mixed difference.
  std::vector<std::pair<std::int64_t, Rational>> witnesses;
};

// For each a in the window with a + K(a+1) <= last, evaluates
// Δ^(n-a)(Δ-1)^a f(a) for every n in [Ka, K(a+1)]. Cells come back sorted by a;
// a window too short for any a yields an empty list.
std::vector<ScanCell> vanishing_scan(const Sequence& s, std::int64_t K, unsigned threads = 0);

struct PolynomialVerdict {
  RationalPoly poly;
};
struct ExpPolyVerdict {
  ExpPolyForm form;
};
struct Inconclusive {
  std::string reason;
};
using Verdict = std::variant<Inconclusive, PolynomialVerdict, ExpPolyVerdict>;

enum class FailureKind {
  polya,      // nonzero top-order difference or sample mismatch during Newton reconstruction
  vanishing,  // nonzero mixed difference in the scan
  sample,     // fitted closed form disagrees with a sample
};

struct FailureRecord {
  FailureKind kind;
  std::int64_t a;
  // Operator order for vanishing failures; 0 for sample mismatches.
  std::int64_t n;
  // Offending value: the mixed difference, or f(a) minus the closed form.
  Rational residual;
};

struct ClassificationReport {
  Verdict verdict;
  std::int64_t verified_from = 0;
  std::int64_t verified_to = -1;
  std::int64_t K_used = 2;
  // The cut B the verdict was built from.
  std::optional<std::int64_t> cut;
  bool integral_coefficients = false;
  std::vector<FailureRecord> failures;

  bool conclusive() const noexcept { return !std::holds_alternative<Inconclusive>(verdict); }
};

struct ClassifyOptions {
  std::int64_t K = 2;
  bool require_integer = false;
  // Fixed cut B; when absent the earliest workable cut is chosen.
  std::optional<std::int64_t> cut;
  unsigned threads = 0;
  // Cap on the failure ledger length.
  std::size_t max_failures = 64;
};

// Pipeline: integrality gate, Newton reconstruction from the earliest cut,
// then the vanishing scan, mixed fit and verification of every sample from
// the cut onward. Never throws for data-dependent failures; they land in the
// report as Inconclusive plus failure records.
ClassificationReport classify(const Sequence& s, const ClassifyOptions& options = {});

}  // namespace intval
