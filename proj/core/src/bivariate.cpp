#include "intval/bivariate.hpp"

namespace intval {

BivariatePoly BivariatePoly::constant(const Rational& c) { return term(c, 0, 0); }

BivariatePoly BivariatePoly::term(const Rational& c, std::uint32_t mu, std::uint32_t nu) {
  BivariatePoly p;
  p.add_term({mu, nu}, c);
  return p;
}

void BivariatePoly::add_term(const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational BivariatePoly::coefficient(std::uint32_t mu, std::uint32_t nu) const {
  const auto it = terms_.find({mu, nu});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t BivariatePoly::degree_x() const {
  std::int64_t d = -1;
  for (const auto& [key, c] : terms_) d = std::max<std::int64_t>(d, key.first);
  return d;
}

std::int64_t BivariatePoly::degree_y() const {
  std::int64_t d = -1;
  for (const auto& [key, c] : terms_) d = std::max<std::int64_t>(d, key.second);
  return d;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return out;
}

Rational BivariatePoly::operator()(const Rational& x, const Rational& y) const {
  Rational sum = 0;
  for (const auto& [key, c] : terms_) sum += c * rpow(x, key.first) * rpow(y, key.second);
  return sum;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string monomial;
    if (key.first > 0) monomial += key.first == 1 ? "x" : "x^" + std::to_string(key.first);
    if (key.second > 0) {
      if (!monomial.empty()) monomial += "*";
      monomial += key.second == 1 ? "y" : "y^" + std::to_string(key.second);
    }
    if (monomial.empty()) {
      out += intval::to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += intval::to_string(magnitude) + "*" + monomial;
    }
  }
  return out;
}

}  // namespace intval
