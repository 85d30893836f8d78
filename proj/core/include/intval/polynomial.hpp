#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "intval/rational.hpp"

namespace intval {

// Univariate polynomial over Q in the monomial basis. coefficients()[i] is the
// coefficient of X^i; the highest stored coefficient is never zero, so the
// zero polynomial has an empty coefficient list.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, std::size_t degree);
  // X - root
  static RationalPoly linear_factor(const Rational& root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  bool has_integer_coefficients() const;

  Rational operator()(const Rational& x) const;

  RationalPoly& operator+=(const RationalPoly& other);
  RationalPoly& operator-=(const RationalPoly& other);
  RationalPoly& operator*=(const Rational& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Human-readable form, e.g. "-1/2*X^2 + 2*X". Not meant for parsing.
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Exact Horner evaluation.
Rational poly_eval(const RationalPoly& p, const Rational& x);

// Unique polynomial of degree <= nodes.size()-1 through (nodes[i], values[i]).
// Built from Newton divided differences and expanded to the monomial basis.
// Throws InputError on duplicate nodes or mismatched lengths.
RationalPoly poly_interpolate(std::span<const std::int64_t> nodes, std::span<const Rational> values);

// Newton divided-difference coefficients c_j with
// P(x) = sum_j c_j * prod_{i<j} (x - nodes[i]).
std::vector<Rational> divided_differences(std::span<const std::int64_t> nodes,
                                          std::span<const Rational> values);

RationalPoly newton_to_monomial(std::span<const std::int64_t> nodes, std::span<const Rational> newton);

// binomial(X - shift, j) as a polynomial in X.
RationalPoly binomial_poly(std::int64_t shift, std::size_t j);

}  // namespace intval
