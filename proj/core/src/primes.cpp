#include "intval/primes.hpp"

#include <algorithm>

#include "intval/errors.hpp"

namespace intval {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt primorial_divisor(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < 1) throw DomainError("primorial_divisor needs n, k >= 1");
  BigInt product = 1;
  for (const auto p : primes_up_to(n)) {
    product *= ipow(BigInt(static_cast<unsigned long>(p)), std::min(k, n / p));
  }
  return product;
}

BigFloat chebyshev_theta(std::uint64_t x, Precision precision) {
  BigInt product = 1;
  for (const auto p : primes_up_to(x)) product *= static_cast<unsigned long>(p);
  return log(BigFloat(product, precision));
}

}  // namespace intval
