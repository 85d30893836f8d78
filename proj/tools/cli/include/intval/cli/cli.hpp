#pragma once

#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "intval/errors.hpp"

namespace intval::cli {

enum ExitCode : int {
  kClean = 0,
  kViolations = 1,
  kUsage = 2,
  kIo = 3,
};

// Invalid or incomplete run configuration.
class UsageError : public InputError {
 public:
  using InputError::InputError;
};

struct Outcome {
  // Report document (or sequence file for gen), ready to write.
  std::string document;
  int exit_code = kClean;
};

// Runs one RunConfig. Reports embed the config verbatim, so feeding a
// report's "config" back in reproduces the report byte for byte.
Outcome execute(const nlohmann::json& config);

// Writes to a temporary sibling and renames it over `path`.
void write_atomically(const std::filesystem::path& path, std::string_view contents);

// Entry point behind the intval binary.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace intval::cli
