#include "intval/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "intval/errors.hpp"

namespace intval {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return RationalPoly(std::move(coeffs));
}

RationalPoly RationalPoly::linear_factor(const Rational& root) { return RationalPoly({-root, Rational(1)}); }

Rational RationalPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

bool RationalPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(out));
}

std::string RationalPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0 || !unit) os << intval::to_string(mag);
    if (k > 0) {
      if (!unit) os << '*';
      os << 'X';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational poly_eval(const RationalPoly& p, const Rational& x) { return p(x); }

std::vector<Rational> divided_differences(std::span<const std::int64_t> nodes,
                                          std::span<const Rational> values) {
  if (nodes.size() != values.size()) throw InputError("nodes and values differ in length");
  std::unordered_set<std::int64_t> seen;
  for (auto m : nodes) {
    if (!seen.insert(m).second) throw InputError("duplicate interpolation node " + std::to_string(m));
  }
  std::vector<Rational> table(values.begin(), values.end());
  const std::size_t n = table.size();
  // After pass j, table[i] holds f[x_{i-j}, ..., x_i] for i >= j.
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      table[i] = (table[i] - table[i - 1]) / Rational(static_cast<long>(nodes[i] - nodes[i - j]));
      if (i == j) break;
    }
  }
  return table;
}

RationalPoly newton_to_monomial(std::span<const std::int64_t> nodes, std::span<const Rational> newton) {
  if (newton.empty()) return {};
  RationalPoly acc = RationalPoly::constant(newton.back());
  for (std::size_t j = newton.size() - 1; j-- > 0;) {
    acc = acc * RationalPoly::linear_factor(Rational(static_cast<long>(nodes[j])));
    acc += RationalPoly::constant(newton[j]);
  }
  return acc;
}

RationalPoly poly_interpolate(std::span<const std::int64_t> nodes, std::span<const Rational> values) {
  const auto newton = divided_differences(nodes, values);
  return newton_to_monomial(nodes, newton);
}

RationalPoly binomial_poly(std::int64_t shift, std::size_t j) {
  RationalPoly acc = RationalPoly::constant(1);
  for (std::size_t i = 0; i < j; ++i) {
    acc = acc * RationalPoly::linear_factor(Rational(static_cast<long>(shift + static_cast<std::int64_t>(i))));
    acc *= Rational(1, static_cast<unsigned long>(i + 1));
  }
  return acc;
}

}  // namespace intval
