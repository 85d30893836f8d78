#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "intval/rational.hpp"

namespace intval {

// Binary precision of a BigFloat, usually requested in decimal digits.
struct Precision {
  mpfr_prec_t bits;

  static Precision digits(unsigned decimal_digits);
  unsigned decimal_digits() const;
  friend bool operator==(Precision, Precision) = default;
};

// RAII owner of an mpfr_t. Every value carries its own precision and binary
// operations round (to nearest) at the larger precision of their operands, so
// no process-wide precision setting exists.
class BigFloat {
 public:
  BigFloat();
  explicit BigFloat(Precision p);
  BigFloat(long value, Precision p);
  BigFloat(int value, Precision p) : BigFloat(static_cast<long>(value), p) {}
  BigFloat(double value, Precision p);
  BigFloat(const BigInt& value, Precision p);
  BigFloat(const Rational& value, Precision p);
  // Decimal or scientific literal, e.g. "2.5e-3".
  BigFloat(const std::string& literal, Precision p);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  Precision precision() const noexcept { return {mpfr_get_prec(value_)}; }
  // Same value rounded to `p`.
  BigFloat with_precision(Precision p) const;

  BigFloat& operator+=(const BigFloat& other);
  BigFloat& operator-=(const BigFloat& other);
  BigFloat& operator*=(const BigFloat& other);
  BigFloat& operator/=(const BigFloat& other);
  BigFloat& operator*=(const BigInt& factor);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, const BigInt& b) { return a *= b; }
  friend BigFloat operator*(BigFloat a, long b);
  friend BigFloat operator/(BigFloat a, long b);
  friend BigFloat operator+(BigFloat a, long b);
  friend BigFloat operator-(BigFloat a, long b);
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend std::partial_ordering operator<=>(const BigFloat& a, long b);
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits, e.g. "1.2500e+01".
  std::string to_string(int digits) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  static BigFloat pi(Precision p);
  static BigFloat ln2(Precision p);

 private:
  mpfr_t value_;
};

BigFloat abs(BigFloat x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat acos(const BigFloat& x);
BigFloat pow(const BigFloat& base, long exponent);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat log_factorial(unsigned long n, Precision p);
BigFloat max(const BigFloat& a, const BigFloat& b);

// A point value with an error radius: the true value lies in
// [mid - radius, mid + radius] (rigorously or by an error estimate, as the
// producer documents).
struct HighPrecisionValue {
  BigFloat mid;
  BigFloat radius;

  BigFloat upper() const { return mid + radius; }
  BigFloat lower() const { return mid - radius; }
};

}  // namespace intval
