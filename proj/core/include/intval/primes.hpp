#pragma once

#include <cstdint>
#include <vector>

#include "intval/bigfloat.hpp"
#include "intval/rational.hpp"

namespace intval {

// Primes <= n by the sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

// prod_{l<=k} prod_{p<=n/l} p, computed as prod_p p^min(k, floor(n/p)).
// Throws DomainError unless n, k >= 1.
BigInt primorial_divisor(std::uint64_t n, std::uint64_t k);

// Chebyshev theta(x) = sum_{p<=x} log p, from the exact primorial.
BigFloat chebyshev_theta(std::uint64_t x, Precision precision);

}  // namespace intval
