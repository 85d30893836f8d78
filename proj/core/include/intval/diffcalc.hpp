#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "intval/errors.hpp"
#include "intval/rational.hpp"
#include "intval/sequence.hpp"

namespace intval {

// Generic difference kernels on contiguous samples v[0], v[1], ... of a
// function at consecutive integers. T needs value semantics, +, -, and
// multiplication by BigInt; T{} must be the additive identity.
namespace diff {

template <class T>
T scaled(const T& v, const BigInt& w) {
  return T(v * w);
}

// (Δv)[i] = v[i+1] - v[i]
template <class T>
std::vector<T> forward(std::span<const T> v) {
  std::vector<T> out;
  if (v.size() < 2) return out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(T(v[i + 1] - v[i]));
  return out;
}

// ((Δ-1)v)[i] = v[i+1] - 2 v[i]
template <class T>
std::vector<T> shifted(std::span<const T> v) {
  std::vector<T> out;
  if (v.size() < 2) return out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(T(v[i + 1] - v[i] - v[i]));
  return out;
}

// (Δ^n v)[i] = sum_k (-1)^(n-k) C(n,k) v[i+k], with one binomial row shared by
// every output position.
template <class T>
std::vector<T> iterated(std::span<const T> v, std::size_t n) {
  std::vector<T> out;
  if (v.size() < n + 1) return out;
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) row[k] = row[k - 1] * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
  for (std::size_t k = 0; k <= n; ++k) {
    if ((n - k) % 2 == 1) row[k] = -row[k];
  }
  out.reserve(v.size() - n);
  for (std::size_t i = 0; i + n < v.size(); ++i) {
    T acc{};
    for (std::size_t k = 0; k <= n; ++k) acc += scaled(v[i + k], row[k]);
    out.push_back(std::move(acc));
  }
  return out;
}

// Δ^m g(0) for every m in [lo, hi]; requires g.size() > hi. The signed
// binomial row is advanced in place from m to m+1 instead of being rebuilt.
template <class T>
std::vector<T> orders_at_origin(std::span<const T> g, std::size_t lo, std::size_t hi) {
  std::vector<T> out;
  if (hi < lo || g.size() < hi + 1) return out;
  out.reserve(hi - lo + 1);
  // row[k] = C(m, k) for the current m.
  std::vector<BigInt> row(hi + 1);
  row[0] = 1;
  for (std::size_t k = 1; k <= lo; ++k) row[k] = row[k - 1] * static_cast<unsigned long>(lo - k + 1) / static_cast<unsigned long>(k);
  for (std::size_t m = lo;; ++m) {
    T acc{};
    for (std::size_t k = 0; k <= m; ++k) {
      if ((m - k) % 2 == 0) {
        acc += scaled(g[k], row[k]);
      } else {
        acc -= scaled(g[k], row[k]);
      }
    }
    out.push_back(std::move(acc));
    if (m == hi) break;
    row[m + 1] = 1;
    for (std::size_t k = m; k >= 1; --k) row[k] += row[k - 1];
  }
  return out;
}

// Δ^(n-a) (Δ-1)^a f at the first sample, for every n in [n_lo, n_hi].
// `window` holds f(a), ..., f(a + n_hi); requires a <= n_lo <= n_hi.
template <class T>
std::vector<T> mixed_orders(std::span<const T> window, std::size_t a, std::size_t n_lo, std::size_t n_hi) {
  if (a > n_lo || n_lo > n_hi || window.size() < n_hi + 1) {
    throw InsufficientDataError("mixed difference window too short");
  }
  std::vector<T> g(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(n_hi + 1));
  for (std::size_t i = 0; i < a; ++i) g = shifted<T>(g);
  return orders_at_origin<T>(g, n_lo - a, n_hi - a);
}

template <class T>
T mixed(std::span<const T> window, std::size_t a, std::size_t n) {
  return mixed_orders<T>(window, a, n, n).front();
}

// Second route: (Δ-1)^a = sum_j C(a,j) (-1)^(a-j) Δ^j, so the mixed operator
// is sum_j C(a,j) (-1)^(a-j) Δ^(n-a+j) f at the first sample.
template <class T>
T mixed_expanded(std::span<const T> window, std::size_t a, std::size_t n) {
  if (a > n || window.size() < n + 1) throw InsufficientDataError("mixed difference window too short");
  const auto orders = orders_at_origin<T>(window.first(n + 1), n - a, n);
  T acc{};
  for (std::size_t j = 0; j <= a; ++j) {
    BigInt w = binomial(a, j);
    if ((a - j) % 2 == 1) w = -w;
    acc += scaled(orders[j], w);
  }
  return acc;
}

}  // namespace diff

// Sequence-level operators. Results keep absolute indexing: the output value
// at a is the operator applied at a.

// Δf on [a0, a0+N-2]. Throws InsufficientDataError if N < 2.
Sequence forward_diff(const Sequence& s);
// Δ^n f via the explicit binomial sum. n = 0 returns s.
Sequence iterated_diff(const Sequence& s, std::size_t n);
// (Δ-1)f
Sequence shifted_diff(const Sequence& s);

// Δ^(n-a) (Δ-1)^a f evaluated at the point a.
struct MixedDiffQuery {
  std::int64_t a;
  std::int64_t n;
};

// Composition route: (Δ-1)^a first, then Δ^(n-a). Needs f(a..a+n).
Rational mixed_diff(const Sequence& s, MixedDiffQuery q);
// Binomial-expansion route, kept as an independent cross-check.
Rational mixed_diff_expanded(const Sequence& s, MixedDiffQuery q);
// mixed_diff for every n in [n_lo, n_hi] at the point a, sharing one window.
std::vector<Rational> mixed_diff_orders(const Sequence& s, std::int64_t a, std::int64_t n_lo, std::int64_t n_hi);

// With f(a) = 2^a h(a): checks (Δ-1)^n f(a) = 2^(a+n) Δ^n h(a) at every a
// where both sides are computable from h's window.
bool conjugation_check(const Sequence& h, std::size_t n);

}  // namespace intval
