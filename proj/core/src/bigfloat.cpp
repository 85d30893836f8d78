#include "intval/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "intval/errors.hpp"

namespace intval {
namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
  return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

// Rounds `target` up to precision `prec` in place when it is narrower.
void widen(mpfr_ptr target, mpfr_prec_t prec) {
  if (mpfr_get_prec(target) < prec) mpfr_prec_round(target, prec, MPFR_RNDN);
}

}  // namespace

Precision Precision::digits(unsigned decimal_digits) {
  const double bits = std::ceil(decimal_digits * 3.3219280948873623) + 8;
  return {static_cast<mpfr_prec_t>(bits)};
}

unsigned Precision::decimal_digits() const {
  return static_cast<unsigned>(std::floor((bits - 8) / 3.3219280948873623));
}

BigFloat::BigFloat() {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& literal, Precision p) {
  mpfr_init2(value_, p.bits);
  char* end = nullptr;
  mpfr_strtofr(value_, literal.c_str(), &end, 10, MPFR_RNDN);
  if (end == literal.c_str() || *end != '\0') {
    mpfr_clear(value_);
    throw InputError("not a decimal number: '" + literal + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(Precision p) const {
  BigFloat out(p);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& other) {
  widen(value_, wider(*this, other));
  mpfr_add(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& other) {
  widen(value_, wider(*this, other));
  mpfr_sub(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& other) {
  widen(value_, wider(*this, other));
  mpfr_mul(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& other) {
  widen(value_, wider(*this, other));
  mpfr_div(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigInt& factor) {
  mpfr_mul_z(value_, value_, factor.get_mpz_t(), MPFR_RNDN);
  return *this;
}

BigFloat operator*(BigFloat a, long b) {
  mpfr_mul_si(a.value_, a.value_, b, MPFR_RNDN);
  return a;
}

BigFloat operator/(BigFloat a, long b) {
  mpfr_div_si(a.value_, a.value_, b, MPFR_RNDN);
  return a;
}

BigFloat operator+(BigFloat a, long b) {
  mpfr_add_si(a.value_, a.value_, b, MPFR_RNDN);
  return a;
}

BigFloat operator-(BigFloat a, long b) {
  mpfr_sub_si(a.value_, a.value_, b, MPFR_RNDN);
  return a;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const BigFloat& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(0, digits - 1), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat BigFloat::pi(Precision p) {
  BigFloat out(p);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::ln2(Precision p) {
  BigFloat out(p);
  mpfr_const_log2(out.value_, MPFR_RNDN);
  return out;
}

BigFloat abs(BigFloat x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

#define INTVAL_UNARY(name, fn)              \
  BigFloat name(const BigFloat& x) {        \
    BigFloat out(x.precision());            \
    fn(out.get(), x.get(), MPFR_RNDN);      \
    return out;                             \
  }

INTVAL_UNARY(exp, mpfr_exp)
INTVAL_UNARY(log, mpfr_log)
INTVAL_UNARY(sqrt, mpfr_sqrt)
INTVAL_UNARY(cos, mpfr_cos)
INTVAL_UNARY(sin, mpfr_sin)
INTVAL_UNARY(acos, mpfr_acos)

#undef INTVAL_UNARY

BigFloat pow(const BigFloat& base, long exponent) {
  BigFloat out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat out({std::max(base.precision().bits, exponent.precision().bits)});
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

BigFloat log_factorial(unsigned long n, Precision p) {
  BigFloat out(p);
  mpfr_set_ui(out.get(), n + 1, MPFR_RNDN);
  mpfr_lngamma(out.get(), out.get(), MPFR_RNDN);
  return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return (a < b) ? b : a; }

}  // namespace intval
