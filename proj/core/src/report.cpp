#include "intval/report.hpp"

namespace intval::report {
namespace {

Json strings(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(intval::to_string(v));
  return out;
}

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const RationalPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(intval::to_string(c));
  return out;
}

Json to_json(const ExpPolyForm& form) { return {{"p1", to_json(form.p1)}, {"p2", to_json(form.p2)}}; }

const char* to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::automatic:
      return "automatic";
    case ScanMode::exhaustive:
      return "exhaustive";
    case ScanMode::sampled:
      return "sampled";
  }
  return "unknown";
}

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::polya:
      return "polya";
    case FailureKind::vanishing:
      return "vanishing";
    case FailureKind::sample:
      return "sample";
  }
  return "unknown";
}

Json to_json(const ClassificationReport& r) {
  Json out;
  if (const auto* poly = std::get_if<PolynomialVerdict>(&r.verdict)) {
    out["verdict"] = "polynomial";
    out["p1"] = to_json(poly->poly);
    out["p2"] = Json::array();
  } else if (const auto* ep = std::get_if<ExpPolyVerdict>(&r.verdict)) {
    out["verdict"] = "exppoly";
    out["p1"] = to_json(ep->form.p1);
    out["p2"] = to_json(ep->form.p2);
  } else {
    out["verdict"] = "inconclusive";
    out["reason"] = std::get<Inconclusive>(r.verdict).reason;
  }
  if (r.conclusive()) {
    out["verified_from"] = r.verified_from;
    out["verified_to"] = r.verified_to;
    out["integral_coefficients"] = r.integral_coefficients;
  }
  out["K"] = r.K_used;
  out["cut"] = optional_int(r.cut);
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"kind", to_string(f.kind)}, {"a", f.a}, {"n", f.n}, {"residual", intval::to_string(f.residual)}});
  }
  out["failures"] = std::move(failures);
  return out;
}

namespace {

Json counterexample_json(const ConcordanceCounterexample& ce) {
  return {{"nodes", ce.nodes}, {"values", strings(ce.values)}, {"interpolant", to_json(ce.poly)}};
}

}  // namespace

Json to_json(const ConcordanceVerdict& v) {
  Json out{{"k", v.k},
           {"lo", v.lo},
           {"hi", v.hi},
           {"holds", v.holds},
           {"mode", to_string(v.mode)},
           {"tuples_checked", v.tuples_checked}};
  out["counterexample"] = v.counterexample ? counterexample_json(*v.counterexample) : Json(nullptr);
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) witnesses.push_back(counterexample_json(w));
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json to_json(const CycloElement& e) { return {{"p", e.p()}, {"coefficients", strings(e.coefficients())}}; }

Json to_json(const TraceIdentity& t) {
  return {{"field_trace", intval::to_string(t.field_trace)},
          {"orbit_sum", intval::to_string(t.orbit_sum)},
          {"group_ring_sum", intval::to_string(t.group_ring_sum)},
          {"rhs", intval::to_string(t.rhs)},
          {"holds", t.orbit_sum == t.rhs && t.group_ring_sum == t.rhs}};
}

Json to_json(const ABoundReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"kind", v.kind == ABoundViolation::Kind::support ? "support" : "magnitude"},
                          {"mu", v.mu},
                          {"nu", v.nu},
                          {"value", intval::to_string(v.value)}});
  }
  Json out{{"a", r.a},
           {"terms", r.terms},
           {"passed", r.passed()},
           {"violations", std::move(violations)},
           {"max_ratio", intval::to_string(r.max_ratio)}};
  out["argmax"] = r.argmax ? Json{{"mu", r.argmax->first}, {"nu", r.argmax->second}} : Json(nullptr);
  return out;
}

Json to_json(const BigFloat& x, int digits) { return x.to_string(digits); }

Json to_json(const HighPrecisionValue& v, int digits) {
  return {{"mid", v.mid.to_string(digits)}, {"radius", v.radius.to_string(3)}};
}

Json to_json(const Interval& x, int digits) {
  return {{"lo", x.lo().to_string(digits)}, {"hi", x.hi().to_string(digits)}, {"text", x.to_string(digits)}};
}

Json to_json(const IntegralBoundReport& r, int digits) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json cell{{"n", c.n}, {"s", c.s}, {"mu", c.mu}};
    cell["I"] = {{"value", to_json(c.I, digits)},
                 {"bound", c.I_bound.to_string(digits)},
                 {"ratio", c.I_ratio.to_string(6)},
                 {"pass", c.I_pass},
                 {"min_d", c.I_min_d.to_string(6)},
                 {"min_b", c.I_min_b ? Json(c.I_min_b->to_string(6)) : Json(nullptr)}};
    cell["J"] = {{"value", to_json(c.J, digits)},
                 {"bound", c.J_bound.to_string(digits)},
                 {"ratio", c.J_ratio.to_string(6)},
                 {"pass", c.J_pass},
                 {"min_d", c.J_min_d.to_string(6)},
                 {"min_b", c.J_min_b.to_string(6)}};
    cells.push_back(std::move(cell));
  }
  return {{"b", r.b},
          {"d", r.d},
          {"margin", r.margin},
          {"cells", std::move(cells)},
          {"violations", r.violations},
          {"worst_ratio", r.worst_ratio.to_string(6)},
          {"passed", r.passed()}};
}

Json to_json(const ErrorChainReport& r, int digits) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"a", row.a},
                    {"max_abs", row.max_abs.to_string(digits)},
                    {"n_at_max", row.n_at_max},
                    {"max_rel_discrepancy", row.max_rel_discrepancy.to_string(3)}});
  }
  return {{"K", r.K},
          {"a_max", r.a_max},
          {"ratio", to_json(r.ratio, digits)},
          {"chain_valid", r.chain_valid},
          {"chain_cutoff", optional_int(r.chain_cutoff)},
          {"direct_cutoff", optional_int(r.direct_cutoff)},
          {"rows", std::move(rows)}};
}

Json to_json(const DecayExpPolyReport& r, int digits) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"a", row.a},
                    {"max_abs", row.max_abs.to_string(digits)},
                    {"n_at_max", row.n_at_max},
                    {"max_rel_discrepancy", row.max_rel_discrepancy.to_string(3)}});
  }
  Json out{{"K", r.K},
           {"c", r.c.to_string(digits)},
           {"rows", std::move(rows)},
           {"max_rel_discrepancy", r.max_rel_discrepancy.to_string(3)},
           {"closed_form_ok", r.closed_form_ok},
           {"decays", r.decays()}};
  out["C_star"] = r.C_star ? Json(r.C_star->to_string(digits)) : Json(nullptr);
  out["slope"] = r.slope ? Json(BigFloat(*r.slope, Precision::digits(17)).to_string(12)) : Json(nullptr);
  out["intercept"] = r.intercept ? Json(BigFloat(*r.intercept, Precision::digits(17)).to_string(12)) : Json(nullptr);
  return out;
}

Json to_json(const DecayPolyReport& r, int digits) {
  return {{"C", intval::to_string(r.C)},
          {"k", r.k},
          {"n_max", r.n_max},
          {"eigen_ok", r.eigen_ok},
          {"threshold", to_json(r.threshold, digits)},
          {"hypothesis", r.hypothesis},
          {"conclusion", r.conclusion},
          {"margin", r.margin.to_string(digits)},
          {"consistent", r.consistent()}};
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace intval::report
