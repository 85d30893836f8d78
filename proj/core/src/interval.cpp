#include "intval/interval.hpp"

#include <algorithm>
#include <array>

#include "intval/errors.hpp"

namespace intval {
namespace {

mpfr_prec_t prec_of(const Interval& a, const Interval& b) {
  return std::max(a.precision().bits, b.precision().bits);
}

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Hull of op over the four endpoint combinations, rounded outward.
Interval corner_hull(const Interval& a, const Interval& b, BinaryOp op) {
  const mpfr_prec_t prec = prec_of(a, b);
  const std::array<mpfr_srcptr, 2> xs{a.lo().get(), a.hi().get()};
  const std::array<mpfr_srcptr, 2> ys{b.lo().get(), b.hi().get()};
  BigFloat lo(Precision{prec});
  BigFloat hi(Precision{prec});
  BigFloat tmp(Precision{prec});
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      op(tmp.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(tmp.get(), lo.get())) mpfr_set(lo.get(), tmp.get(), MPFR_RNDD);
      op(tmp.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(tmp.get(), hi.get())) mpfr_set(hi.get(), tmp.get(), MPFR_RNDU);
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw DomainError("interval with lo > hi");
}

Interval Interval::enclose(const Rational& q, Precision p) {
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Precision Interval::precision() const noexcept {
  return {std::max(lo_.precision().bits, hi_.precision().bits)};
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }

BigFloat Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

Interval operator+(const Interval& a, const Interval& b) {
  const Precision p{prec_of(a, b)};
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  const Precision p{prec_of(a, b)};
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) { return corner_hull(a, b, mpfr_mul); }

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0) throw DomainError("interval division by an interval containing 0");
  return corner_hull(a, b, mpfr_div);
}

std::string Interval::to_string(int digits) const {
  char* lo = nullptr;
  char* hi = nullptr;
  mpfr_asprintf(&lo, "%.*RDe", std::max(0, digits - 1), lo_.get());
  mpfr_asprintf(&hi, "%.*RUe", std::max(0, digits - 1), hi_.get());
  std::string out = std::string("[") + lo + ", " + hi + "]";
  mpfr_free_str(lo);
  mpfr_free_str(hi);
  return out;
}

Interval exp(const Interval& x) {
  BigFloat lo(x.precision());
  BigFloat hi(x.precision());
  mpfr_exp(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_exp(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval pow(const Interval& x, unsigned long k) {
  Interval acc = Interval::enclose(Rational(1), x.precision());
  for (unsigned long i = 0; i < k; ++i) acc = acc * x;
  return acc;
}

bool certainly_less(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }

bool certainly_less(const Interval& a, const Rational& b) { return mpfr_cmp_q(a.hi().get(), b.get_mpq_t()) < 0; }

bool certainly_less(const Rational& a, const Interval& b) { return mpfr_cmp_q(b.lo().get(), a.get_mpq_t()) > 0; }

Interval e_constant(Precision p) { return exp(Interval::enclose(Rational(1), p)); }

}  // namespace intval
