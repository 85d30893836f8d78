#pragma once

// Independent reference computations for the exact modules. Everything here
// is deliberately naive and shares no code path with the library beyond the
// GMP number types.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

// Pascal triangle rows 0..n_max.
inline std::vector<std::vector<mpz_class>> pascal(std::size_t n_max) {
  std::vector<std::vector<mpz_class>> rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

inline mpq_class lagrange_eval(const std::vector<std::int64_t>& x, const std::vector<mpq_class>& y, const mpq_class& t) {
  mpq_class sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpq_class term = y[i];
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j == i) continue;
      term *= (t - x[j]) / mpq_class(x[i] - x[j]);
    }
    sum += term;
  }
  return sum;
}

// Monomial coefficients of the Lagrange interpolant, by expanding each basis
// product sum_i y_i prod_{j != i} (X - x_j)/(x_i - x_j).
inline std::vector<mpq_class> lagrange_coefficients(const std::vector<std::int64_t>& x, const std::vector<mpq_class>& y) {
  const std::size_t n = x.size();
  std::vector<mpq_class> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * x[j];
      }
      basis = std::move(next);
      denom *= x[i] - x[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
      out[k] += basis[k] * y[i] / denom;
      out[k].canonicalize();
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Searches Z[X] polynomials of degree <= 3 with coefficients in [-bound, bound]
// for one taking value[i] at node[i]. The two top coefficients are enumerated
// and the lower two are solved from the first two distinct nodes, then the
// candidate is checked against every node.
inline std::optional<std::vector<std::int64_t>> brute_force_zx(const std::vector<std::int64_t>& nodes,
                                                               const std::vector<std::int64_t>& values,
                                                               std::int64_t bound) {
  std::map<std::int64_t, std::int64_t> pts;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [it, ok] = pts.emplace(nodes[i], values[i]);
    if (!ok && it->second != values[i]) return std::nullopt;
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> p(pts.begin(), pts.end());
  auto eval = [](const std::vector<std::int64_t>& c, std::int64_t x) {
    std::int64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  };
  for (std::int64_t c3 = -bound; c3 <= bound; ++c3) {
    for (std::int64_t c2 = -bound; c2 <= bound; ++c2) {
      const auto [x0, y0] = p[0];
      const std::int64_t r0 = y0 - c3 * x0 * x0 * x0 - c2 * x0 * x0;
      std::vector<std::int64_t> lows;
      if (p.size() == 1) {
        // c1 free: try each, c0 forced.
        for (std::int64_t c1 = -bound; c1 <= bound; ++c1) {
          const std::int64_t c0 = r0 - c1 * x0;
          if (c0 >= -bound && c0 <= bound) return std::vector<std::int64_t>{c0, c1, c2, c3};
        }
        continue;
      }
      const auto [x1, y1] = p[1];
      const std::int64_t r1 = y1 - c3 * x1 * x1 * x1 - c2 * x1 * x1;
      if ((r1 - r0) % (x1 - x0) != 0) continue;
      const std::int64_t c1 = (r1 - r0) / (x1 - x0);
      const std::int64_t c0 = r0 - c1 * x0;
      if (c1 < -bound || c1 > bound || c0 < -bound || c0 > bound) continue;
      const std::vector<std::int64_t> c{c0, c1, c2, c3};
      bool ok = true;
      for (const auto& [x, y] : p) ok = ok && eval(c, x) == y;
      if (ok) return c;
    }
  }
  return std::nullopt;
}

// Forward-difference table by repeated pairwise subtraction; row m holds Δ^m v.
template <class T>
std::vector<std::vector<T>> difference_table(const std::vector<T>& v) {
  std::vector<std::vector<T>> rows{v};
  while (rows.back().size() > 1) {
    const auto& last = rows.back();
    std::vector<T> next;
    for (std::size_t i = 0; i + 1 < last.size(); ++i) next.push_back(last[i + 1] - last[i]);
    rows.push_back(std::move(next));
  }
  return rows;
}

// Stirling numbers of the second kind S(n, k) by recurrence.
inline mpz_class stirling2(unsigned n, unsigned k) {
  std::vector<std::vector<mpz_class>> s(n + 1, std::vector<mpz_class>(n + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + j * s[i - 1][j];
  }
  return k <= n ? s[n][k] : mpz_class(0);
}

inline mpz_class factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// Primes by trial division against all smaller numbers.
inline bool slow_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Enclosure [lo, hi] of e^q for rational q >= 0 from the Taylor series:
// after N terms the tail is at most 2 * q^(N+1)/(N+1)! once N+2 > 2q.
inline std::pair<mpq_class, mpq_class> exp_enclosure(const mpq_class& q, unsigned terms) {
  mpq_class sum = 0;
  mpq_class term = 1;
  for (unsigned n = 0; n < terms; ++n) {
    sum += term;
    term *= q / mpq_class(n + 1);
    term.canonicalize();
  }
  return {sum, sum + 2 * term};
}

}  // namespace oracle
