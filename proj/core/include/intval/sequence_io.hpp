#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "intval/sequence.hpp"

namespace intval {

enum class SequenceFormat { bfile, structured };

// OEIS b-file text: one "index value" pair per line, '#' comments and blank
// lines ignored. Indices must be contiguous and increasing; values integers.
Sequence parse_bfile(std::string_view text);
// Throws InputError if the sequence holds a non-integer value.
std::string emit_bfile(const Sequence& s);

// JSON document {"start": <int>, "values": ["1", "-3/4", ...]}. Values may also
// be given as JSON integers on input; output always uses strings.
Sequence parse_structured(std::string_view text);
std::string emit_structured(const Sequence& s);

SequenceFormat format_from_name(std::string_view name);
// ".json" selects structured, anything else bfile.
SequenceFormat format_from_path(const std::filesystem::path& path);

Sequence parse_sequence(std::string_view text, SequenceFormat format);
std::string emit_sequence(const Sequence& s, SequenceFormat format);

// ingest: reads and parses a file. Parse errors carry the line number; I/O
// failures raise IoError with the path.
Sequence read_sequence(const std::filesystem::path& path, SequenceFormat format);

}  // namespace intval
