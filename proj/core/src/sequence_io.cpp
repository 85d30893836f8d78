#include "intval/sequence_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "intval/errors.hpp"

namespace intval {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Sequence parse_bfile(std::string_view text) {
  std::vector<Rational> values;
  std::int64_t start = 0;
  std::int64_t expected = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) throw ParseError("expected 'index value'", line_no);
    const auto index_text = line.substr(0, sep);
    const auto value_text = trim(line.substr(sep));
    if (value_text.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError("trailing tokens after value", line_no);
    }

    std::int64_t index = 0;
    BigInt value;
    try {
      const BigInt big_index = parse_integer(index_text);
      if (!big_index.fits_slong_p()) throw ParseError("index out of range", line_no);
      index = big_index.get_si();
      value = parse_integer(value_text);
    } catch (const InputError& e) {
      throw ParseError(e.what(), line_no);
    }

    if (values.empty()) {
      if (index < 0) throw ParseError("negative index " + std::to_string(index), line_no);
      start = index;
    } else if (index != expected) {
      throw ParseError("index gap: expected " + std::to_string(expected) + ", found " + std::to_string(index),
                       line_no);
    }
    values.emplace_back(value);
    expected = index + 1;
  }
  if (values.empty()) throw ParseError("no data lines", 0);
  return Sequence(start, std::move(values));
}

std::string emit_bfile(const Sequence& s) {
  if (!s.all_integer()) throw InputError("b-file format holds integers only");
  std::string out;
  std::int64_t a = s.start();
  for (const auto& v : s.values()) {
    out += std::to_string(a++);
    out += ' ';
    out += to_string(v);
    out += '\n';
  }
  return out;
}

Sequence parse_structured(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("start") || !doc.contains("values")) {
    throw ParseError("structured sequence needs 'start' and 'values'", 0);
  }
  const auto& start = doc["start"];
  if (!start.is_number_integer()) throw ParseError("'start' must be an integer", 0);
  const auto& raw = doc["values"];
  if (!raw.is_array()) throw ParseError("'values' must be an array", 0);

  std::vector<Rational> values;
  values.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& v = raw[i];
    try {
      if (v.is_string()) {
        values.push_back(parse_rational(v.get<std::string>()));
      } else if (v.is_number_integer()) {
        values.push_back(parse_rational(v.dump()));
      } else {
        throw ParseError("values[" + std::to_string(i) + "] must be a string or integer", 0);
      }
    } catch (const InputError& e) {
      throw ParseError("values[" + std::to_string(i) + "]: " + e.what(), 0);
    }
  }
  try {
    return Sequence(start.get<std::int64_t>(), std::move(values));
  } catch (const InputError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string emit_structured(const Sequence& s) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : s.values()) values.push_back(to_string(v));
  nlohmann::json doc{{"start", s.start()}, {"values", std::move(values)}};
  return doc.dump(2) + "\n";
}

SequenceFormat format_from_name(std::string_view name) {
  if (name == "bfile") return SequenceFormat::bfile;
  if (name == "structured" || name == "json") return SequenceFormat::structured;
  throw InputError("unknown sequence format '" + std::string(name) + "'");
}

SequenceFormat format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? SequenceFormat::structured : SequenceFormat::bfile;
}

Sequence parse_sequence(std::string_view text, SequenceFormat format) {
  return format == SequenceFormat::bfile ? parse_bfile(text) : parse_structured(text);
}

std::string emit_sequence(const Sequence& s, SequenceFormat format) {
  return format == SequenceFormat::bfile ? emit_bfile(s) : emit_structured(s);
}

Sequence read_sequence(const std::filesystem::path& path, SequenceFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  try {
    return parse_sequence(buf.str(), format);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), path.string() + ": ");
  }
}

}  // namespace intval
