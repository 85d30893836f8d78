#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "intval/bigfloat.hpp"
#include "intval/bivariate.hpp"
#include "intval/interval.hpp"
#include "intval/quadrature.hpp"
#include "intval/rational.hpp"

namespace intval {

// G(k, x, y) = prod_{0<=q<k} (1 + x + q y) * prod_{k<=q<a} (1 - q y).
// Throws DomainError unless 0 <= k <= a.
BivariatePoly build_G(std::int64_t a, std::int64_t k);

// sum_{k=0}^{a} (-1)^(a-k) C(a, k) G(k, x, y). Throws DomainError for a < 0.
BivariatePoly delta_a_G(std::int64_t a);

struct ABoundViolation {
  enum class Kind { support, magnitude };
  Kind kind;
  std::uint32_t mu;
  std::uint32_t nu;
  Rational value;
};

struct ABoundReport {
  std::int64_t a = 0;
  std::size_t terms = 0;
  // A_{mu,nu} nonzero with mu + 2 nu < a, or |A_{mu,nu}| > 6^a a^nu.
  std::vector<ABoundViolation> violations;
  // max |A_{mu,nu}| / (6^a a^nu) over the stored terms, with its position.
  Rational max_ratio = 0;
  std::optional<BivariatePoly::Key> argmax;

  bool passed() const noexcept { return violations.empty(); }
};

// Throws DomainError for a < 1.
ABoundReport verify_A_bounds(std::int64_t a);

// Arclength integrals over the two parts of the contour made of the arc of
// |z| = 2n through z = 2n and the vertical chord Re z = -s:
//   I = int_arc   n! 2^|z| / (|z| |z-1| ... |z-n|) |(z-2n)/n|^mu |dz|
//   J = int_chord n!       / (|z| |z-1| ... |z-n|) |(z-2n)/n|^mu |dz|
// Throws DomainError unless n >= 4, 2 <= s <= n/2 and 0 <= mu <= s.
HighPrecisionValue quad_I(std::int64_t n, std::int64_t s, std::int64_t mu, const QuadratureOptions& options = {});
HighPrecisionValue quad_J(std::int64_t n, std::int64_t s, std::int64_t mu, const QuadratureOptions& options = {});

struct IntegralBoundOptions {
  long b = 100;
  long d = 100;
  // A cell passes only if upper * (1 + margin) < bound.
  double margin = 1e-3;
  QuadratureOptions quadrature;
  unsigned threads = 0;
  // Restrict the sweep to one s or one mu; all admissible values otherwise.
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> mu;
  // Upper cap on mu applied on top of mu <= s.
  std::optional<std::int64_t> mu_max;
};

struct IntegralCell {
  std::int64_t n;
  std::int64_t s;
  std::int64_t mu;
  HighPrecisionValue I;
  HighPrecisionValue J;
  // d (bs/n)^(mu/2) and d (bs/n)^(s-1).
  BigFloat I_bound;
  BigFloat J_bound;
  // upper * (1 + margin) / bound; below 1 means pass.
  BigFloat I_ratio;
  BigFloat J_ratio;
  bool I_pass;
  bool J_pass;
  // Smallest d that works with the configured b, and smallest b with the
  // configured d. b is unconstrained for I when mu = 0.
  BigFloat I_min_d;
  BigFloat J_min_d;
  std::optional<BigFloat> I_min_b;
  BigFloat J_min_b;
};

struct IntegralBoundReport {
  long b;
  long d;
  double margin;
  std::vector<IntegralCell> cells;
  std::size_t violations = 0;
  BigFloat worst_ratio;

  bool passed() const noexcept { return violations == 0; }
};

// Sweeps every admissible (s, mu) for each n. Throws DomainError if some
// n < 4 or a requested s / mu is outside the admissible range.
IntegralBoundReport verify_integral_bounds(const std::vector<std::int64_t>& n_set,
                                           const IntegralBoundOptions& options = {});

struct ErrorChainRow {
  std::int64_t a;
  // Largest |Δ^(n-a) (Δ-1)^a H(a)| over a <= n <= K(a+1), with its n.
  BigFloat max_abs;
  std::int64_t n_at_max;
  // Largest relative gap between the difference table and the closed form
  // (e^-K - 1)^(n-a) (e^-K - 2)^a e^(-Ka).
  BigFloat max_rel_discrepancy;
};

struct ErrorChainReport {
  std::int64_t K;
  std::int64_t a_max;
  // Enclosure of (3/2)(2/e)^K.
  Interval ratio;
  bool chain_valid;
  // Smallest a with 2^K ratio^a certainly below 1/2.
  std::optional<std::int64_t> chain_cutoff;
  // Smallest a from which every computed value is below 1/2.
  std::optional<std::int64_t> direct_cutoff;
  std::vector<ErrorChainRow> rows;
};

// H(x) = e^(-Kx). Throws DomainError for K < 2 or a_max < 0.
ErrorChainReport error_chain_check(std::int64_t K, std::int64_t a_max, unsigned digits = 60);

struct DecayRow {
  std::int64_t a;
  // Largest |Δ^(n-a) (Δ-1)^a g(a)| over n in [Ka, K(a+1)], with its n.
  BigFloat max_abs;
  std::int64_t n_at_max;
  // Largest relative gap between the difference table and the closed form.
  BigFloat max_rel_discrepancy;
};

struct DecayExpPolyReport {
  std::int64_t K;
  // c = 2^(1 + 2/K)
  BigFloat c;
  std::vector<DecayRow> rows;
  // Least-squares fit of log max_abs against a: C* = exp(slope). Absent
  // when the range holds fewer than two values of a.
  std::optional<BigFloat> C_star;
  std::optional<double> slope;
  std::optional<double> intercept;
  BigFloat max_rel_discrepancy;
  // Discrepancy below 1e-20 on every cell.
  bool closed_form_ok;

  bool decays() const { return C_star && *C_star < 1L; }
};

// g(z) = c^z, so the mixed difference is (c-1)^(n-a) (c-2)^a c^a. The
// working precision grows with n to absorb the cancellation in the table.
// Throws DomainError for K < 4 or an empty or negative range.
DecayExpPolyReport decay_exppoly(std::int64_t K, std::int64_t a_lo, std::int64_t a_hi, unsigned digits = 40);

struct DecayPolyReport {
  Rational C;
  std::int64_t k;
  std::int64_t n_max;
  // Δ^n C^x at 0 equals (C-1)^n exactly for every n <= n_max.
  bool eigen_ok;
  // Enclosure of e^gamma_k + 1.
  Interval threshold;
  // C < e^gamma_k + 1, certainly.
  bool hypothesis;
  // C - 1 < e^gamma_k, certainly.
  bool conclusion;
  // Lower bound on e^gamma_k - (C - 1).
  BigFloat margin;

  // False only when the hypothesis holds without the conclusion, or the
  // eigenfunction identity fails.
  bool consistent() const noexcept { return eigen_ok && (!hypothesis || conclusion); }
};

// Throws DomainError unless C > 1, k >= 0 and n_max >= 0.
DecayPolyReport decay_poly(const Rational& C, std::int64_t k, std::int64_t n_max);

}  // namespace intval
