
#include "intval/analytic.hpp"
#include "intval/classify.hpp"
#include "intval/cli/cli.hpp"
#include "intval/concordance.hpp"
#include "intval/cyclotomic.hpp"
#include "intval/parallel.hpp"
#include "intval/primes.hpp"
#include "intval/report.hpp"
#include "intval/sequence_io.hpp"

namespace intval::cli {
namespace {

using Json = nlohmann::json;

constexpr const char* kVersion = "0.1.0";

const Json& field(const Json& config, const char* key) {
  const auto it = config.find(key);
  if (it == config.end()) throw UsageError(std::string("config is missing '") + key + "'");
  return *it;
}

template <class T>
T get(const Json& config, const char* key) {
  try {
    return field(config, key).get<T>();
  } catch (const Json::type_error&) {
    throw UsageError(std::string("config field '") + key + "' has the wrong type");
  }
}

template <class T>
std::optional<T> get_optional(const Json& config, const char* key) {
  const Json& v = field(config, key);
  if (v.is_null()) return std::nullopt;
  return get<T>(config, key);
}

unsigned threads_of(const Json& config) { return get<unsigned>(config, "threads"); }

QuadratureOptions quadrature_of(const Json& config) {
  QuadratureOptions q;
  q.precision = Precision::digits(get<unsigned>(config, "precision"));
  q.relative_tolerance = get<double>(config, "tolerance");
  return q;
}

Sequence load_input(const Json& config) {
  const auto path = get<std::string>(config, "input");
  const auto format = get<std::string>(config, "format");
  return read_sequence(path, format == "auto" ? format_from_path(path) : format_from_name(format));
}

struct Result {
  Json body;
  std::size_t violations = 0;
  // Data findings that only fail the run under "strict".
  bool soft_failure = false;
};

Result run_classify(const Json& config) {
  ClassifyOptions options;
  options.K = get<std::int64_t>(config, "K");
  options.cut = get_optional<std::int64_t>(config, "cut");
  options.require_integer = get<bool>(config, "require_integer");
  options.max_failures = get<std::size_t>(config, "max_failures");
  options.threads = threads_of(config);
  if (options.K < 2) throw UsageError("K must be at least 2");
  const Sequence s = load_input(config);
  const auto report = classify(s, options);
  return {report::to_json(report), 0, !report.conclusive()};
}

ScanMode mode_from_name(const std::string& name) {
  if (name == "automatic") return ScanMode::automatic;
  if (name == "exhaustive") return ScanMode::exhaustive;
  if (name == "sampled") return ScanMode::sampled;
  throw UsageError("unknown scan mode '" + name + "'");
}

Result run_concord(const Json& config) {
  const auto k = get<std::int64_t>(config, "k");
  ConcordanceOptions options;
  options.mode = mode_from_name(get<std::string>(config, "mode"));
  options.samples = get<std::uint64_t>(config, "samples");
  options.seed = get<std::uint64_t>(config, "seed");
  options.max_witnesses = get<std::size_t>(config, "max_witnesses");
  options.threads = threads_of(config);
  const Sequence s = load_input(config);
  const std::int64_t lo = get_optional<std::int64_t>(config, "lo").value_or(s.start());
  const std::int64_t hi = get_optional<std::int64_t>(config, "hi").value_or(s.last());

  const auto verdict = concordance_scan(s, k, lo, hi, options);
  Result result;
  result.body["scan"] = report::to_json(verdict);
  result.soft_failure = !verdict.holds;

  Json congruence = Json::array();
  for (const auto p : get<std::vector<std::uint64_t>>(config, "congruence_primes")) {
    const std::int64_t a_hi = hi - k * static_cast<std::int64_t>(p);
    Json entry{{"p", p}, {"a_lo", lo}, {"a_hi", a_hi}};
    Json found = Json::array();
    if (a_hi >= lo) {
      for (const auto& v : delta_congruence_check(s, k, p, lo, a_hi)) {
        found.push_back({{"a", v.a}, {"n", v.n}, {"value", to_string(v.value)}});
      }
    }
    result.soft_failure = result.soft_failure || !found.empty();
    entry["violations"] = std::move(found);
    congruence.push_back(std::move(entry));
  }
  result.body["congruence"] = std::move(congruence);

  if (const auto n_max = get_optional<std::int64_t>(config, "gap_n_max")) {
    const std::int64_t a_hi = hi - *n_max;
    Json entry{{"n_lo", 1}, {"n_hi", *n_max}, {"a_lo", lo}, {"a_hi", a_hi}};
    Json found = Json::array();
    if (a_hi >= lo) {
      for (const auto& v : gap_check(s, k, 1, *n_max, lo, a_hi)) {
        found.push_back({{"a", v.a}, {"n", v.n}, {"value", to_string(v.value)}, {"divisor", to_string(v.divisor)}});
      }
    }
    result.soft_failure = result.soft_failure || !found.empty();
    entry["violations"] = std::move(found);
    result.body["gap"] = std::move(entry);
  } else {
    result.body["gap"] = nullptr;
  }
  return result;
}

Result run_cmain(const Json& config) {
  const auto p_max = get<std::uint64_t>(config, "p_max");
  const auto k_max = get<std::uint64_t>(config, "k_max");
  const auto l_max = get<std::uint64_t>(config, "l_max");
  if (k_max < 1) throw UsageError("k_max must be at least 1");

  struct Cell {
    std::uint64_t p, k, i, l;
  };
  std::vector<Cell> cells;
  for (const auto p : primes_up_to(p_max)) {
    for (std::uint64_t k = 1; k <= k_max; ++k) {
      for (std::uint64_t i = 0; i < p; ++i) {
        for (std::uint64_t l = 0; l <= l_max; ++l) cells.push_back({p, k, i, l});
      }
    }
  }
  // i = 0 marks the first family.
  std::vector<std::optional<BigInt>> bad(cells.size());
  parallel_for(cells.size(), threads_of(config), [&](std::size_t idx) {
    const auto& c = cells[idx];
    const BigInt value = c.i == 0 ? cmain_first(c.p, c.k, c.l) : cmain_second(c.p, c.k, c.i, c.l);
    const BigInt modulus = ipow(BigInt(static_cast<unsigned long>(c.p)), c.k);
    if (!mpz_divisible_p(value.get_mpz_t(), modulus.get_mpz_t())) bad[idx] = value;
  });

  Json violations = Json::array();
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    if (!bad[idx]) continue;
    const auto& c = cells[idx];
    violations.push_back({{"family", c.i == 0 ? "first" : "second"},
                          {"p", c.p},
                          {"k", c.k},
                          {"i", c.i},
                          {"l", c.l},
                          {"value", to_string(*bad[idx])}});
  }
  const std::size_t count = violations.size();
  return {{{"cells", cells.size()}, {"violations", std::move(violations)}}, count};
}

Result run_trace(const Json& config) {
  const auto primes = get<std::vector<std::uint64_t>>(config, "primes");
  const auto M_max = get<std::uint64_t>(config, "M_max");
  const auto pp_max = get<std::uint64_t>(config, "pp_max");

  std::size_t cells = 0;
  std::size_t field_gaps = 0;
  Json mismatches = Json::array();
  for (const auto p : primes) {
    const auto sp = static_cast<std::int64_t>(p);
    for (std::uint64_t M = 0; M <= M_max; ++M) {
      for (std::int64_t t = -sp + 1; t <= static_cast<std::int64_t>(M); ++t) {
        ++cells;
        const auto id = trace_identity(p, M, t);
        if (id.field_trace != id.rhs) ++field_gaps;
        if (id.orbit_sum != id.rhs || id.group_ring_sum != id.rhs) {
          Json entry = report::to_json(id);
          entry["p"] = p;
          entry["M"] = M;
          entry["t"] = t;
          mismatches.push_back(std::move(entry));
        }
      }
    }
  }

  Json witnesses = Json::array();
  std::size_t pp_failures = 0;
  for (const auto p : primes_up_to(pp_max)) {
    if (p == 2) continue;
    Json entry{{"p", p}};
    try {
      const CycloElement y = pp_witness(p);
      const CycloElement one_minus_zeta = CycloElement::one(p) - CycloElement::zeta_power(p, 1);
      const bool exact = y * BigInt(static_cast<unsigned long>(p)) == one_minus_zeta.pow(p - 1);
      entry["y"] = report::to_json(y)["coefficients"];
      entry["exact"] = exact;
      if (!exact) ++pp_failures;
    } catch (const DomainError& e) {
      entry["y"] = nullptr;
      entry["exact"] = false;
      entry["error"] = e.what();
      ++pp_failures;
    }
    witnesses.push_back(std::move(entry));
  }

  const std::size_t violations = mismatches.size() + pp_failures;
  return {{{"cells", cells},
           {"mismatches", std::move(mismatches)},
           {"field_trace_differs", field_gaps},
           {"pp_witnesses", std::move(witnesses)}},
          violations};
}

Result run_gpoly(const Json& config) {
  const auto a_max = get<std::int64_t>(config, "a_max");
  if (a_max < 1) throw UsageError("a_max must be at least 1");
  Json rows = Json::array();
  std::size_t violations = 0;
  for (std::int64_t a = 1; a <= a_max; ++a) {
    const auto r = verify_A_bounds(a);
    violations += r.violations.size();
    rows.push_back(report::to_json(r));
  }
  return {{{"rows", std::move(rows)}}, violations};
}

Result run_integral(const Json& config) {
  IntegralBoundOptions options;
  options.b = get<long>(config, "b");
  options.d = get<long>(config, "d");
  options.margin = get<double>(config, "margin");
  options.s = get_optional<std::int64_t>(config, "s");
  options.mu = get_optional<std::int64_t>(config, "mu");
  options.mu_max = get_optional<std::int64_t>(config, "mu_max");
  options.quadrature = quadrature_of(config);
  options.threads = threads_of(config);
  const auto r = verify_integral_bounds(get<std::vector<std::int64_t>>(config, "n"), options);
  return {report::to_json(r), r.violations};
}

Result run_error(const Json& config) {
  const auto a_max = get<std::int64_t>(config, "a_max");
  const auto digits = get<unsigned>(config, "precision");
  Json rows = Json::array();
  std::size_t violations = 0;
  for (const auto K : get<std::vector<std::int64_t>>(config, "K")) {
    const auto r = error_chain_check(K, a_max, digits);
    if (!r.chain_valid || !r.direct_cutoff) ++violations;
    rows.push_back(report::to_json(r));
  }
  return {{{"checks", std::move(rows)}}, violations};
}

Result run_decay(const Json& config) {
  const auto a_max = get<std::int64_t>(config, "a_max");
  const auto digits = get<unsigned>(config, "precision");
  Json exppoly = Json::array();
  std::size_t violations = 0;
  for (const auto K : get<std::vector<std::int64_t>>(config, "K")) {
    const auto r = decay_exppoly(K, 1, a_max, digits);
    if (!r.closed_form_ok || !r.decays()) ++violations;
    exppoly.push_back(report::to_json(r));
  }
  Json poly = Json::array();
  const auto n_max = get<std::int64_t>(config, "n_max");
  for (const auto& entry : field(config, "poly")) {
    const auto C = parse_rational(get<std::string>(entry, "C"));
    const auto r = decay_poly(C, get<std::int64_t>(entry, "k"), n_max);
    if (!r.consistent()) ++violations;
    poly.push_back(report::to_json(r));
  }
  return {{{"exppoly", std::move(exppoly)}, {"poly", std::move(poly)}}, violations};
}

RationalPoly poly_from(const Json& config, const char* key) {
  std::vector<Rational> coeffs;
  for (const auto& c : get<std::vector<std::string>>(config, key)) coeffs.push_back(parse_rational(c));
  return RationalPoly(std::move(coeffs));
}

Outcome run_gen(const Json& config) {
  const ExpPolyForm form{poly_from(config, "p1"), poly_from(config, "p2")};
  const auto start = get<std::int64_t>(config, "start");
  const auto length = get<std::size_t>(config, "length");
  if (length == 0) throw UsageError("length must be positive");
  Sequence s = synthesize(form, start, length);
  const Json& perturb = field(config, "perturb");
  if (!perturb.is_null()) {
    const auto index = get<std::int64_t>(perturb, "index");
    const auto delta = parse_rational(get<std::string>(perturb, "delta"));
    if (!s.contains(index)) throw UsageError("perturbation index outside the generated window");
    std::vector<Rational> values(s.values().begin(), s.values().end());
    values[static_cast<std::size_t>(index - start)] += delta;
    s = Sequence(start, std::move(values));
  }
  const auto format = get<std::string>(config, "format");
  return {emit_sequence(s, format_from_name(format)), kClean};
}

}  // namespace

Outcome execute(const Json& config) {
  if (!config.is_object()) throw UsageError("config must be an object");
  const auto command = get<std::string>(config, "command");
  if (command == "gen") return run_gen(config);

  Result result;
  if (command == "classify") {
    result = run_classify(config);
  } else if (command == "concord") {
    result = run_concord(config);
  } else if (command == "verify") {
    const auto check = get<std::string>(config, "check");
    if (check == "cmain") {
      result = run_cmain(config);
    } else if (check == "trace") {
      result = run_trace(config);
    } else if (check == "gpoly") {
      result = run_gpoly(config);
    } else if (check == "integral") {
      result = run_integral(config);
    } else if (check == "error") {
      result = run_error(config);
    } else if (check == "decay") {
      result = run_decay(config);
    } else {
      throw UsageError("unknown verify check '" + check + "'");
    }
  } else {
    throw UsageError("unknown command '" + command + "'");
  }

  const bool strict = get<bool>(config, "strict");
  int code = kClean;
  if (result.violations > 0 || (strict && result.soft_failure)) code = kViolations;
  Json doc{{"tool", "intval"},
           {"version", kVersion},
           {"config", config},
           {"result", std::move(result.body)},
           {"violations", result.violations},
           {"exit_code", code}};
  return {report::render(doc), code};
}

}  // namespace intval::cli
