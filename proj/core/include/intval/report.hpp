#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "intval/analytic.hpp"
#include "intval/classify.hpp"
#include "intval/concordance.hpp"
#include "intval/cyclotomic.hpp"
#include "intval/polynomial.hpp"

// JSON views of the library's results. Exact integers and rationals are
// written as decimal strings; floating values as scientific strings with a
// fixed number of significant digits, so equal inputs give equal documents.
namespace intval::report {

using Json = nlohmann::json;

inline constexpr int kDigits = 20;

Json to_json(const RationalPoly& p);
Json to_json(const ExpPolyForm& form);
Json to_json(const ClassificationReport& r);
Json to_json(const ConcordanceVerdict& v);
Json to_json(const CycloElement& e);
Json to_json(const TraceIdentity& t);
Json to_json(const ABoundReport& r);
Json to_json(const BigFloat& x, int digits = kDigits);
Json to_json(const HighPrecisionValue& v, int digits = kDigits);
Json to_json(const Interval& x, int digits = kDigits);
Json to_json(const IntegralBoundReport& r, int digits = kDigits);
Json to_json(const ErrorChainReport& r, int digits = kDigits);
Json to_json(const DecayExpPolyReport& r, int digits = kDigits);
Json to_json(const DecayPolyReport& r, int digits = kDigits);

const char* to_string(ScanMode mode);
const char* to_string(FailureKind kind);

// Two-space indented document with a trailing newline.
std::string render(const Json& doc);

}  // namespace intval::report
