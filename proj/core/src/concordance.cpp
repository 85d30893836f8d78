#include "intval/concordance.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "intval/diffcalc.hpp"
#include "intval/errors.hpp"
#include "intval/parallel.hpp"
#include "intval/primes.hpp"

namespace intval {
namespace {

constexpr std::int64_t kExhaustiveWidth = 40;

std::uint64_t count_subsets(std::uint64_t n, std::uint64_t r) {
  const BigInt c = binomial(n, r);
  return c.fits_ulong_p() ? c.get_ui() : UINT64_MAX;
}

std::vector<BigInt> integer_window(const Sequence& s, std::int64_t lo, std::int64_t hi) {
  if (!s.covers(lo, hi)) {
    throw InsufficientDataError("samples do not cover [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (!s.integral_on(lo, hi)) throw InputError("non-integer sample in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  std::vector<BigInt> out;
  for (const auto& v : s.window(lo, hi)) out.push_back(v.get_num());
  return out;
}

ConcordanceCounterexample make_counterexample(std::vector<std::int64_t> nodes, const std::vector<BigInt>& window,
                                              std::int64_t lo) {
  ConcordanceCounterexample ce;
  std::vector<Rational> values;
  for (const auto m : nodes) {
    ce.values.push_back(window[static_cast<std::size_t>(m - lo)]);
    values.emplace_back(ce.values.back());
  }
  ce.poly = poly_interpolate(nodes, values);
  ce.nodes = std::move(nodes);
  return ce;
}

// Depth-first walk over the subsets of one first node, in lexicographic
// order. diag[d][l] holds the divided difference over the last l+1 chosen
// nodes at depth d; a non-integral entry fails every completion at once.
class SubsetWalker {
 public:
  SubsetWalker(const std::vector<BigInt>& window, std::int64_t lo, std::size_t size, std::size_t cap)
      : window_(window), lo_(lo), size_(size), cap_(cap), chosen_(size), diag_(size, std::vector<BigInt>(size)) {}

  void run(std::size_t first) {
    chosen_[0] = first;
    diag_[0][0] = window_[first];
    descend(1);
  }

  std::uint64_t checked = 0;
  std::vector<std::vector<std::int64_t>> failures;

 private:
  void descend(std::size_t depth) {
    const std::size_t width = window_.size();
    if (depth == size_) {
      ++checked;
      return;
    }
    for (std::size_t next = chosen_[depth - 1] + 1; next + (size_ - depth) <= width; ++next) {
      chosen_[depth] = next;
      if (extend(depth, next)) {
        descend(depth + 1);
      } else {
        record_failures(depth + 1);
      }
    }
  }

  bool extend(std::size_t depth, std::size_t next) {
    auto& row = diag_[depth];
    const auto& prev = diag_[depth - 1];
    row[0] = window_[next];
    for (std::size_t l = 1; l <= depth; ++l) {
      const auto gap = static_cast<long>(next - chosen_[depth - l]);
      BigInt num = row[l - 1] - prev[l - 1];
      if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(gap))) return false;
      mpz_divexact_ui(row[l].get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(gap));
    }
    return true;
  }

  // Every completion of chosen_[0..depth) fails.
  void record_failures(std::size_t depth) {
    const std::size_t width = window_.size();
    const std::size_t missing = size_ - depth;
    checked += count_subsets(width - chosen_[depth - 1] - 1, missing);
    if (failures.size() < cap_) enumerate(depth);
  }

  void enumerate(std::size_t depth) {
    if (failures.size() >= cap_) return;
    if (depth == size_) {
      std::vector<std::int64_t> nodes;
      for (const auto i : chosen_) nodes.push_back(lo_ + static_cast<std::int64_t>(i));
      failures.push_back(std::move(nodes));
      return;
    }
    for (std::size_t next = chosen_[depth - 1] + 1; next + (size_ - depth) <= window_.size(); ++next) {
      chosen_[depth] = next;
      enumerate(depth + 1);
      if (failures.size() >= cap_) return;
    }
  }

  const std::vector<BigInt>& window_;
  std::int64_t lo_;
  std::size_t size_;
  std::size_t cap_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<BigInt>> diag_;
};

// Floyd's algorithm: `size` distinct offsets out of [0, width), sorted.
std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t width, std::size_t size) {
  std::vector<std::size_t> picked;
  for (std::size_t j = width - size; j < width; ++j) {
    std::uniform_int_distribution<std::size_t> dist(0, j);
    const std::size_t t = dist(rng);
    if (std::find(picked.begin(), picked.end(), t) == picked.end()) {
      picked.push_back(t);
    } else {
      picked.push_back(j);
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace

InterpolationResult int_interpolable(std::span<const std::int64_t> nodes, std::span<const BigInt> values) {
  if (nodes.size() != values.size()) throw InputError("nodes and values differ in length");
  InterpolationResult result;
  std::map<std::int64_t, BigInt> merged;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto [it, inserted] = merged.emplace(nodes[i], values[i]);
    if (!inserted && it->second != values[i]) {
      result.conflict = nodes[i];
      return result;
    }
  }
  std::vector<std::int64_t> distinct;
  std::vector<Rational> vals;
  for (const auto& [m, v] : merged) {
    distinct.push_back(m);
    vals.emplace_back(v);
  }
  result.poly = poly_interpolate(distinct, vals);
  result.integral = result.poly.has_integer_coefficients();
  return result;
}

bool integral_divided_differences(std::span<const std::int64_t> nodes, std::span<const BigInt> values) {
  if (nodes.size() != values.size()) throw InputError("nodes and values differ in length");
  std::vector<BigInt> level(values.begin(), values.end());
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    for (std::size_t i = 0; i + j < nodes.size(); ++i) {
      const BigInt gap(static_cast<long>(nodes[i + j] - nodes[i]));
      if (gap == 0) throw InputError("repeated node " + std::to_string(nodes[i]));
      BigInt num = level[i + 1] - level[i];
      if (!mpz_divisible_p(num.get_mpz_t(), gap.get_mpz_t())) return false;
      mpz_divexact(level[i].get_mpz_t(), num.get_mpz_t(), gap.get_mpz_t());
    }
  }
  return true;
}

ConcordanceVerdict concordance_scan(const Sequence& s, std::int64_t k, std::int64_t lo, std::int64_t hi,
                                    const ConcordanceOptions& options) {
  if (k < 0) throw InputError("concordance level must be >= 0");
  if (hi - lo < k) throw InputError("window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] holds fewer than k+1 nodes");
  const auto window = integer_window(s, lo, hi);
  const std::size_t width = window.size();
  const auto size = static_cast<std::size_t>(k + 1);

  ConcordanceVerdict verdict;
  verdict.k = k;
  verdict.lo = lo;
  verdict.hi = hi;
  verdict.mode = options.mode;
  if (verdict.mode == ScanMode::automatic) {
    verdict.mode = static_cast<std::int64_t>(width) > kExhaustiveWidth ? ScanMode::sampled : ScanMode::exhaustive;
  }

  std::vector<std::vector<std::int64_t>> failures;
  if (verdict.mode == ScanMode::exhaustive) {
    const std::size_t firsts = width - size + 1;
    std::vector<SubsetWalker> walkers;
    walkers.reserve(firsts);
    for (std::size_t f = 0; f < firsts; ++f) walkers.emplace_back(window, lo, size, options.max_witnesses + 1);
    parallel_for(firsts, options.threads, [&](std::size_t f) { walkers[f].run(f); });
    for (auto& w : walkers) {
      verdict.tuples_checked += w.checked;
      for (auto& nodes : w.failures) {
        if (failures.size() > options.max_witnesses) break;
        failures.push_back(std::move(nodes));
      }
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::vector<std::vector<std::size_t>> draws(options.samples);
    for (auto& d : draws) d = random_subset(rng, width, size);
    std::vector<char> ok(draws.size(), 1);
    parallel_for(draws.size(), options.threads, [&](std::size_t i) {
      std::vector<std::int64_t> nodes;
      std::vector<BigInt> values;
      for (const auto j : draws[i]) {
        nodes.push_back(lo + static_cast<std::int64_t>(j));
        values.push_back(window[j]);
      }
      ok[i] = integral_divided_differences(nodes, values) ? 1 : 0;
    });
    verdict.tuples_checked = draws.size();
    for (std::size_t i = 0; i < draws.size(); ++i) {
      if (ok[i]) continue;
      std::vector<std::int64_t> nodes;
      for (const auto j : draws[i]) nodes.push_back(lo + static_cast<std::int64_t>(j));
      failures.push_back(std::move(nodes));
    }
    std::sort(failures.begin(), failures.end());
    failures.erase(std::unique(failures.begin(), failures.end()), failures.end());
  }

  verdict.holds = failures.empty();
  if (!verdict.holds) {
    verdict.counterexample = make_counterexample(failures.front(), window, lo);
    for (std::size_t i = 1; i < failures.size() && verdict.witnesses.size() < options.max_witnesses; ++i) {
      verdict.witnesses.push_back(make_counterexample(failures[i], window, lo));
    }
  }
  return verdict;
}

BigInt cmain_first(std::uint64_t p, std::uint64_t k, std::uint64_t l) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw DomainError("cmain_first needs k >= 1");
  BigInt sum = 0;
  for (std::uint64_t j = 0; j <= k; ++j) {
    const BigInt term = binomial(k * p, j * p) * ipow(BigInt(static_cast<unsigned long>(j * p)), l);
    if ((j * p) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt cmain_second(std::uint64_t p, std::uint64_t k, std::uint64_t i, std::uint64_t l) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw DomainError("cmain_second needs k >= 1");
  if (i < 1 || i > p - 1) throw DomainError("cmain_second needs 1 <= i <= p-1");
  BigInt sum = 0;
  for (std::uint64_t j = 0; j < k; ++j) {
    const std::uint64_t m = j * p + i;
    const BigInt term = binomial(k * p, m) * ipow(BigInt(static_cast<unsigned long>(m)), l);
    if ((j * p) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<CongruenceViolation> delta_congruence_check(const Sequence& s, std::int64_t k, std::uint64_t p,
                                                        std::int64_t a_lo, std::int64_t a_hi) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw DomainError("congruence check needs k >= 1");
  if (a_hi < a_lo) return {};
  const auto n = static_cast<std::size_t>(k) * p;
  const auto window = integer_window(s, a_lo, a_hi + static_cast<std::int64_t>(n));
  const BigInt modulus = ipow(BigInt(static_cast<unsigned long>(p)), static_cast<std::uint64_t>(k));
  const auto diffs = diff::iterated<BigInt>(window, n);

  std::vector<CongruenceViolation> out;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (!mpz_divisible_p(diffs[i].get_mpz_t(), modulus.get_mpz_t())) {
      out.push_back({a_lo + static_cast<std::int64_t>(i), static_cast<std::int64_t>(n), diffs[i]});
    }
  }
  return out;
}

std::vector<GapViolation> gap_check(const Sequence& s, std::int64_t k, std::int64_t n_lo, std::int64_t n_hi,
                                    std::int64_t a_lo, std::int64_t a_hi) {
  if (k < 1) throw DomainError("gap check needs k >= 1");
  if (n_lo < 1) throw DomainError("gap check needs n >= 1");
  if (n_hi < n_lo || a_hi < a_lo) return {};
  const auto window = integer_window(s, a_lo, a_hi + n_hi);

  std::vector<BigInt> divisors;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    divisors.push_back(primorial_divisor(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)));
  }

  std::vector<GapViolation> out;
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    const std::span<const BigInt> g(window.data() + (a - a_lo), static_cast<std::size_t>(n_hi) + 1);
    const auto orders = diff::orders_at_origin<BigInt>(g, static_cast<std::size_t>(n_lo), static_cast<std::size_t>(n_hi));
    for (std::size_t j = 0; j < orders.size(); ++j) {
      if (orders[j] == 0) continue;
      if (!mpz_divisible_p(orders[j].get_mpz_t(), divisors[j].get_mpz_t())) {
        out.push_back({a, n_lo + static_cast<std::int64_t>(j), orders[j], divisors[j]});
      }
    }
  }
  return out;
}

Interval growth_threshold(std::uint64_t k, unsigned digits) {
  const Precision precision = Precision::digits(digits + 10);
  Rational gamma = 0;
  for (std::uint64_t j = 1; j <= k; ++j) gamma += Rational(1, static_cast<unsigned long>(j));
  gamma.canonicalize();
  return exp(Interval::enclose(gamma, precision)) + Interval::enclose(Rational(1), precision);
}

}  // namespace intval
