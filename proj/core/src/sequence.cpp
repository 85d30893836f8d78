#include "intval/sequence.hpp"

#include <algorithm>
#include <string>

#include "intval/errors.hpp"

namespace intval {

Sequence::Sequence(std::int64_t start, std::vector<Rational> values)
    : start_(start), values_(std::move(values)) {
  if (start_ < 0) throw InputError("sequence start must be nonnegative, got " + std::to_string(start_));
  if (values_.empty()) throw InputError("sequence must hold at least one value");
  for (auto& v : values_) v.canonicalize();
  all_integer_ = std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return is_integer(v); });
}

const Rational& Sequence::at(std::int64_t a) const {
  if (!contains(a)) {
    throw InsufficientDataError("index " + std::to_string(a) + " outside window [" + std::to_string(start_) +
                                ", " + std::to_string(last()) + "]");
  }
  return values_[static_cast<std::size_t>(a - start_)];
}

std::span<const Rational> Sequence::window(std::int64_t lo, std::int64_t hi) const {
  if (!covers(lo, hi)) {
    throw InsufficientDataError("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                "] not contained in [" + std::to_string(start_) + ", " + std::to_string(last()) +
                                "]");
  }
  return std::span<const Rational>(values_).subspan(static_cast<std::size_t>(lo - start_),
                                                    static_cast<std::size_t>(hi - lo + 1));
}

bool Sequence::integral_on(std::int64_t lo, std::int64_t hi) const {
  const auto w = window(lo, hi);
  return std::all_of(w.begin(), w.end(), [](const Rational& v) { return is_integer(v); });
}

}  // namespace intval
