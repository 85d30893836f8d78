#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "intval/rational.hpp"

namespace intval {

// Sparse polynomial in x, y over Q; key (mu, nu) holds the coefficient of
// x^mu y^nu. Zero coefficients are never stored.
class BivariatePoly {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;

  BivariatePoly() = default;
  static BivariatePoly constant(const Rational& c);
  // c * x^mu * y^nu
  static BivariatePoly term(const Rational& c, std::uint32_t mu, std::uint32_t nu);

  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  Rational coefficient(std::uint32_t mu, std::uint32_t nu) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  // Largest mu and nu present; -1 for the zero polynomial.
  std::int64_t degree_x() const;
  std::int64_t degree_y() const;

  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator*=(const Rational& c);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator*(BivariatePoly a, const Rational& c) { return a *= c; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

  Rational operator()(const Rational& x, const Rational& y) const;

  // e.g. "1 + 2*x + x^2 + y + x*y", terms ordered by (mu, nu).
  std::string to_string() const;

 private:
  void add_term(const Key& key, const Rational& c);

  std::map<Key, Rational> terms_;
};

}  // namespace intval
