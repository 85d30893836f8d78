#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace intval {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: duplicate nodes, negative start index, bad rational text.
class InputError : public Error {
 public:
  using Error::Error;
};

// A precondition on a numeric parameter failed (non-prime p, K < 2, n < 4, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested window is not contained in the available samples.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// The mixed monomial/exponential interpolation system had no unique solution.
class SingularSystemError : public Error {
 public:
  SingularSystemError(const std::string& what, std::vector<std::int64_t> nodes)
      : Error(what), nodes_(std::move(nodes)) {}

  const std::vector<std::int64_t>& nodes() const noexcept { return nodes_; }

 private:
  std::vector<std::int64_t> nodes_;
};

// Text input that does not follow a supported format. `line` is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& detail, std::size_t line, const std::string& context = {})
      : Error(context + (line ? "line " + std::to_string(line) + ": " : std::string()) + detail),
        detail_(detail),
        line_(line) {}

  const std::string& detail() const noexcept { return detail_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string detail_;
  std::size_t line_;
};

}  // namespace intval

namespace intval {

// File-system failure; the message carries the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace intval
