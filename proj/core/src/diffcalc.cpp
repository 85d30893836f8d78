#include "intval/diffcalc.hpp"

#include <string>

namespace intval {
namespace {

void validate(const Sequence& s, MixedDiffQuery q) {
  if (q.a < 0 || q.n < q.a) {
    throw DomainError("mixed difference needs 0 <= a <= n (a=" + std::to_string(q.a) + ", n=" + std::to_string(q.n) +
                      ")");
  }
  s.window(q.a, q.a + q.n);
}

}  // namespace

Sequence forward_diff(const Sequence& s) {
  if (s.size() < 2) throw InsufficientDataError("forward difference needs at least 2 samples");
  return Sequence(s.start(), diff::forward<Rational>(s.values()));
}

Sequence iterated_diff(const Sequence& s, std::size_t n) {
  if (s.size() < n + 1) {
    throw InsufficientDataError("order-" + std::to_string(n) + " difference needs " + std::to_string(n + 1) +
                                " samples, have " + std::to_string(s.size()));
  }
  if (n == 0) return s;
  return Sequence(s.start(), diff::iterated<Rational>(s.values(), n));
}

Sequence shifted_diff(const Sequence& s) {
  if (s.size() < 2) throw InsufficientDataError("shifted difference needs at least 2 samples");
  return Sequence(s.start(), diff::shifted<Rational>(s.values()));
}

Rational mixed_diff(const Sequence& s, MixedDiffQuery q) {
  validate(s, q);
  return diff::mixed<Rational>(s.window(q.a, q.a + q.n), static_cast<std::size_t>(q.a),
                               static_cast<std::size_t>(q.n));
}

Rational mixed_diff_expanded(const Sequence& s, MixedDiffQuery q) {
  validate(s, q);
  return diff::mixed_expanded<Rational>(s.window(q.a, q.a + q.n), static_cast<std::size_t>(q.a),
                                        static_cast<std::size_t>(q.n));
}

std::vector<Rational> mixed_diff_orders(const Sequence& s, std::int64_t a, std::int64_t n_lo, std::int64_t n_hi) {
  validate(s, {a, n_hi});
  if (n_lo < a || n_lo > n_hi) throw DomainError("mixed difference orders need a <= n_lo <= n_hi");
  return diff::mixed_orders<Rational>(s.window(a, a + n_hi), static_cast<std::size_t>(a),
                                      static_cast<std::size_t>(n_lo), static_cast<std::size_t>(n_hi));
}

bool conjugation_check(const Sequence& h, std::size_t n) {
  if (h.size() < n + 1) throw InsufficientDataError("conjugation check needs n+1 samples of h");
  std::vector<Rational> f;
  f.reserve(h.size());
  for (std::int64_t a = h.start(); a <= h.last(); ++a) f.emplace_back(h.at(a) * pow2(static_cast<std::uint64_t>(a)));

  std::vector<Rational> lhs = f;
  for (std::size_t i = 0; i < n; ++i) lhs = diff::shifted<Rational>(lhs);
  const auto rhs = diff::iterated<Rational>(h.values(), n);

  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const auto a = static_cast<std::uint64_t>(h.start()) + i;
    if (lhs[i] != rhs[i] * pow2(a + n)) return false;
  }
  return true;
}

}  // namespace intval
