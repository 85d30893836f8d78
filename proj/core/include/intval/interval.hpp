#pragma once

#include <string>

#include "intval/bigfloat.hpp"
#include "intval/rational.hpp"

namespace intval {

// Closed interval [lo, hi] with outward (directed) rounding on every
// operation, so the exact result of the corresponding real operation on any
// points of the operands is always enclosed.
class Interval {
 public:
  // Throws DomainError if lo > hi.
  Interval(BigFloat lo, BigFloat hi);

  // Tightest enclosure of an exact rational at precision p.
  static Interval enclose(const Rational& q, Precision p);

  const BigFloat& lo() const noexcept { return lo_; }
  const BigFloat& hi() const noexcept { return hi_; }
  Precision precision() const noexcept;

  bool contains(const Rational& q) const;
  bool contains(const Interval& inner) const;
  // Upper bound on hi - lo.
  BigFloat width() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  // Throws DomainError if b contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);

  // "[lo, hi]" with lo rounded down and hi rounded up at `digits` significant digits.
  std::string to_string(int digits) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

Interval exp(const Interval& x);
// x^k for k >= 0.
Interval pow(const Interval& x, unsigned long k);

// Certainly a < b, i.e. every point of a is below every point of b.
bool certainly_less(const Interval& a, const Interval& b);
bool certainly_less(const Interval& a, const Rational& b);
bool certainly_less(const Rational& a, const Interval& b);

// Enclosure of Euler's number.
Interval e_constant(Precision p);

}  // namespace intval
