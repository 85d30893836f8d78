#include "intval/rational.hpp"

#include <cctype>

#include "intval/errors.hpp"

namespace intval {
namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_signed_digit_run(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return is_digit_run(s);
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

BigInt parse_integer(std::string_view text) {
  if (!is_signed_digit_run(text)) {
    throw InputError("not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_signed_digit_run(num) || !is_digit_run(den)) {
    throw InputError("not a rational: '" + std::string(text) + "'");
  }
  return make_rational(parse_integer(num), parse_integer(den));
}

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow2(std::uint64_t m) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), m);
  return r;
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational rpow(const Rational& base, std::uint64_t exponent) {
  return make_rational(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
}

}  // namespace intval
