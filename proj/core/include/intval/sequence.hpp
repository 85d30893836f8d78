#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "intval/rational.hpp"

namespace intval {

// A finite window f(start), ..., f(start + size() - 1) of exact values.
// Indices are absolute: at(a) addresses f(a), never an offset into the window.
class Sequence {
 public:
  // Throws InputError if start < 0 or values is empty.
  Sequence(std::int64_t start, std::vector<Rational> values);

  std::int64_t start() const noexcept { return start_; }
  // Last index held (inclusive).
  std::int64_t last() const noexcept { return start_ + static_cast<std::int64_t>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }

  bool contains(std::int64_t a) const noexcept { return a >= start_ && a <= last(); }
  bool covers(std::int64_t lo, std::int64_t hi) const noexcept { return lo <= hi && contains(lo) && contains(hi); }

  // Throws InsufficientDataError outside the window.
  const Rational& at(std::int64_t a) const;
  // Values f(lo..hi); throws InsufficientDataError unless covers(lo, hi).
  std::span<const Rational> window(std::int64_t lo, std::int64_t hi) const;
  std::span<const Rational> values() const noexcept { return values_; }

  bool all_integer() const noexcept { return all_integer_; }
  bool integral_on(std::int64_t lo, std::int64_t hi) const;

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.start_ == b.start_ && a.values_ == b.values_;
  }

 private:
  std::int64_t start_;
  std::vector<Rational> values_;
  bool all_integer_;
};

}  // namespace intval
