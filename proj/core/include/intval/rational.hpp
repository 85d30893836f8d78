#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace intval {

// Arbitrary-precision integers and rationals. mpq_class keeps its value in
// lowest terms with a positive denominator as long as every value enters
// through make_rational / parse_rational or GMP arithmetic.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "[-]digits" or "[-]digits/digits"; the result is canonicalized.
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

// "n" for integers, "n/d" otherwise. parse_rational(to_string(q)) == q.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// n!/(k!(n-k)!), zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt pow2(std::uint64_t m);
BigInt ipow(const BigInt& base, std::uint64_t exponent);
Rational rpow(const Rational& base, std::uint64_t exponent);

// (-1)^e as +1/-1.
inline int sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace intval
