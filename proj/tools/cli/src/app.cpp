#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "intval/cli/cli.hpp"
#include "intval/rational.hpp"

namespace intval::cli {
namespace {

using Json = nlohmann::json;

Json optional_json(const CLI::Option* opt, std::int64_t value) { return opt->count() ? Json(value) : Json(nullptr); }

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw UsageError("config " + path + " is not valid JSON: " + e.what());
  }
  if (doc.is_object() && doc.contains("config")) return doc["config"];
  return doc;
}

// "C:k" -> {"C": C, "k": k}
Json poly_case(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--poly expects C:k, got '" + text + "'");
  const Rational C = parse_rational(text.substr(0, colon));
  std::int64_t k = 0;
  try {
    k = std::stoll(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--poly expects C:k, got '" + text + "'");
  }
  return {{"C", to_string(C)}, {"k", k}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification and verification toolkit for integer-valued sequences", "intval"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string output;
  unsigned threads = 0;
  app.add_option("--config", config_path, "Replay the run configuration embedded in a report (or a bare config file)");
  app.add_option("--output", output, "Write the result to this file (atomically) instead of stdout");
  app.add_option("--threads", threads, "Worker threads; 0 uses every core")->capture_default_str();
  app.set_version_flag("--version", "intval 0.1.0");

  // classify
  auto* classify = app.add_subcommand("classify", "Classify a sequence as polynomial or P1 + P2*2^x");
  std::string c_input;
  std::string c_format = "auto";
  std::int64_t c_K = 2;
  std::int64_t c_cut = 0;
  bool c_large_K = false;
  bool c_require_integer = false;
  std::size_t c_max_failures = 64;
  bool c_strict = false;
  classify->add_option("--input", c_input, "Sequence file")->required();
  classify->add_option("--format", c_format, "bfile, structured or auto (by extension)")->capture_default_str();
  auto* c_K_opt = classify->add_option("--K", c_K, "Mixed-difference window parameter")->capture_default_str();
  classify->add_flag("--large-K", c_large_K, "Use K = 100000")->excludes(c_K_opt);
  auto* c_cut_opt = classify->add_option("--cut", c_cut, "Fix the cut B instead of searching for it");
  classify->add_flag("--require-integer", c_require_integer, "Give up unless every sample is an integer");
  classify->add_option("--max-failures", c_max_failures, "Cap on recorded failures")->capture_default_str();
  classify->add_flag("--strict", c_strict, "Exit 1 on an inconclusive verdict");

  // concord
  auto* concord = app.add_subcommand("concord", "Test k-concordance on a window and its congruence consequences");
  std::string k_input;
  std::string k_format = "auto";
  std::int64_t k_k = 1;
  std::int64_t k_lo = 0;
  std::int64_t k_hi = 0;
  std::string k_mode = "automatic";
  std::uint64_t k_samples = 100000;
  std::uint64_t k_seed = 1;
  std::size_t k_max_witnesses = 64;
  std::vector<std::uint64_t> k_primes;
  std::int64_t k_gap = 0;
  bool k_strict = false;
  concord->add_option("--input", k_input, "Sequence file")->required();
  concord->add_option("--format", k_format, "bfile, structured or auto (by extension)")->capture_default_str();
  concord->add_option("--k", k_k, "Concordance level")->required();
  auto* k_lo_opt = concord->add_option("--lo", k_lo, "Window start (default: first sample)");
  auto* k_hi_opt = concord->add_option("--hi", k_hi, "Window end (default: last sample)");
  concord->add_option("--mode", k_mode, "automatic, exhaustive or sampled")
      ->check(CLI::IsMember({"automatic", "exhaustive", "sampled"}))
      ->capture_default_str();
  concord->add_option("--samples", k_samples, "Tuples drawn in sampled mode")->capture_default_str();
  concord->add_option("--seed", k_seed, "Seed for sampled mode")->capture_default_str();
  concord->add_option("--max-witnesses", k_max_witnesses, "Cap on listed counterexamples")->capture_default_str();
  concord->add_option("--congruence-p", k_primes, "Primes p for the p^k | Δ^(kp) f(a) check")->delimiter(',');
  auto* k_gap_opt = concord->add_option("--gap-n-max", k_gap, "Run the primorial divisibility check for 1 <= n <= N");
  concord->add_flag("--strict", k_strict, "Exit 1 on a counterexample or congruence violation");

  // verify
  auto* verify = app.add_subcommand("verify", "Run one of the exact or numerical verification suites");
  verify->require_subcommand(1);

  auto* cmain = verify->add_subcommand("cmain", "Binomial congruence families modulo p^k");
  std::uint64_t v_p_max = 31, v_k_max = 5, v_l_max = 8;
  cmain->add_option("--p-max", v_p_max, "Largest prime")->capture_default_str();
  cmain->add_option("--k-max", v_k_max, "Largest k")->capture_default_str();
  cmain->add_option("--l-max", v_l_max, "Largest exponent l")->capture_default_str();

  auto* trace = verify->add_subcommand("trace", "Cyclotomic trace identity and the (1-zeta)^(p-1) = p y witness");
  std::vector<std::uint64_t> v_primes{3, 5, 7, 11, 13};
  std::uint64_t v_M_max = 25, v_pp_max = 31;
  trace->add_option("--primes", v_primes, "Odd primes for the trace grid")->delimiter(',')->capture_default_str();
  trace->add_option("--M-max", v_M_max, "Largest M")->capture_default_str();
  trace->add_option("--pp-max", v_pp_max, "Largest prime for the witness check")->capture_default_str();

  auto* gpoly = verify->add_subcommand("gpoly", "Support and size of the coefficients of Δ^a G(0, x, y)");
  std::int64_t v_a_max = 10;
  gpoly->add_option("--a-max", v_a_max, "Largest a")->capture_default_str();

  auto* integral = verify->add_subcommand("integral", "Contour integral bounds with explicit constants b, d");
  std::vector<std::int64_t> v_n{4, 8, 16, 32, 64};
  std::int64_t v_s = 0, v_mu = 0, v_mu_max = 0;
  long v_b = 100, v_d = 100;
  double v_margin = 1e-3, v_tolerance = 1e-6;
  unsigned i_precision = 60;
  integral->add_option("--n", v_n, "Values of n")->delimiter(',')->capture_default_str();
  auto* v_s_opt = integral->add_option("--s", v_s, "Only this s");
  auto* v_mu_opt = integral->add_option("--mu", v_mu, "Only this mu");
  auto* v_mu_max_opt = integral->add_option("--mu-max", v_mu_max, "Cap mu at this value");
  integral->add_option("--b", v_b, "Constant b")->capture_default_str();
  integral->add_option("--d", v_d, "Constant d")->capture_default_str();
  integral->add_option("--margin", v_margin, "Relative comparison margin")->capture_default_str();
  integral->add_option("--tolerance", v_tolerance, "Relative quadrature tolerance")->capture_default_str();
  integral->add_option("--precision", i_precision, "Working precision in decimal digits")->capture_default_str();

  auto* error = verify->add_subcommand("error", "Error chain for H(x) = exp(-Kx)");
  std::vector<std::int64_t> e_K{2, 3, 4};
  std::int64_t e_a_max = 8;
  unsigned e_precision = 60;
  error->add_option("--K", e_K, "Values of K")->delimiter(',')->capture_default_str();
  error->add_option("--a-max", e_a_max, "Largest a")->capture_default_str();
  error->add_option("--precision", e_precision, "Working precision in decimal digits")->capture_default_str();

  auto* decay = verify->add_subcommand("decay", "Decay of mixed differences on closed-form test functions");
  std::vector<std::int64_t> d_K{100};
  std::int64_t d_a_max = 8, d_n_max = 30;
  unsigned d_precision = 60;
  std::vector<std::string> d_poly{"2:1", "3:2", "5:2"};
  decay->add_option("--K", d_K, "Values of K for g(z) = 2^((1+2/K) z)")->delimiter(',')->capture_default_str();
  decay->add_option("--a-max", d_a_max, "Largest a")->capture_default_str();
  decay->add_option("--precision", d_precision, "Base precision in decimal digits")->capture_default_str();
  decay->add_option("--poly", d_poly, "C:k cases for g(z) = C^z")->delimiter(',')->capture_default_str();
  decay->add_option("--n-max", d_n_max, "Largest n for the C^z table")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Synthesize P1(a) + P2(a)*2^a samples");
  std::vector<std::string> g_p1, g_p2;
  std::int64_t g_start = 0, g_perturb_index = 0;
  std::size_t g_length = 0;
  std::string g_perturb_delta = "1";
  std::string g_format = "bfile";
  gen->add_option("--p1", g_p1, "Coefficients of P1, constant first")->delimiter(',');
  gen->add_option("--p2", g_p2, "Coefficients of P2, constant first")->delimiter(',');
  gen->add_option("--start", g_start, "First index")->capture_default_str();
  gen->add_option("--length", g_length, "Number of samples")->required();
  auto* g_perturb_opt = gen->add_option("--perturb-index", g_perturb_index, "Alter the sample at this index");
  gen->add_option("--perturb-delta", g_perturb_delta, "Amount added to the perturbed sample")->capture_default_str();
  gen->add_option("--format", g_format, "bfile or structured")
      ->check(CLI::IsMember({"bfile", "structured"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kClean : kUsage;
  }

  try {
    Json config;
    if (!config_path.empty()) {
      if (!app.get_subcommands().empty()) throw UsageError("--config replays a run and takes no subcommand");
      config = load_config(config_path);
    } else if (app.got_subcommand(classify)) {
      config = {{"command", "classify"},
                {"input", c_input},
                {"format", c_format},
                {"K", c_large_K ? std::int64_t{100000} : c_K},
                {"cut", optional_json(c_cut_opt, c_cut)},
                {"require_integer", c_require_integer},
                {"max_failures", c_max_failures},
                {"threads", threads},
                {"strict", c_strict}};
    } else if (app.got_subcommand(concord)) {
      config = {{"command", "concord"},
                {"input", k_input},
                {"format", k_format},
                {"k", k_k},
                {"lo", optional_json(k_lo_opt, k_lo)},
                {"hi", optional_json(k_hi_opt, k_hi)},
                {"mode", k_mode},
                {"samples", k_samples},
                {"seed", k_seed},
                {"max_witnesses", k_max_witnesses},
                {"congruence_primes", k_primes},
                {"gap_n_max", optional_json(k_gap_opt, k_gap)},
                {"threads", threads},
                {"strict", k_strict}};
    } else if (app.got_subcommand(verify)) {
      config = {{"command", "verify"}, {"threads", threads}, {"strict", false}};
      if (verify->got_subcommand(cmain)) {
        config["check"] = "cmain";
        config["p_max"] = v_p_max;
        config["k_max"] = v_k_max;
        config["l_max"] = v_l_max;
      } else if (verify->got_subcommand(trace)) {
        config["check"] = "trace";
        config["primes"] = v_primes;
        config["M_max"] = v_M_max;
        config["pp_max"] = v_pp_max;
      } else if (verify->got_subcommand(gpoly)) {
        config["check"] = "gpoly";
        config["a_max"] = v_a_max;
      } else if (verify->got_subcommand(integral)) {
        config["check"] = "integral";
        config["n"] = v_n;
        config["s"] = optional_json(v_s_opt, v_s);
        config["mu"] = optional_json(v_mu_opt, v_mu);
        config["mu_max"] = optional_json(v_mu_max_opt, v_mu_max);
        config["b"] = v_b;
        config["d"] = v_d;
        config["margin"] = v_margin;
        config["tolerance"] = v_tolerance;
        config["precision"] = i_precision;
      } else if (verify->got_subcommand(error)) {
        config["check"] = "error";
        config["K"] = e_K;
        config["a_max"] = e_a_max;
        config["precision"] = e_precision;
      } else {
        config["check"] = "decay";
        config["K"] = d_K;
        config["a_max"] = d_a_max;
        config["precision"] = d_precision;
        config["n_max"] = d_n_max;
        Json cases = Json::array();
        for (const auto& text : d_poly) cases.push_back(poly_case(text));
        config["poly"] = std::move(cases);
      }
    } else if (app.got_subcommand(gen)) {
      Json perturb = nullptr;
      if (g_perturb_opt->count()) perturb = {{"index", g_perturb_index}, {"delta", to_string(parse_rational(g_perturb_delta))}};
      Json p1 = Json::array(), p2 = Json::array();
      for (const auto& c : g_p1) p1.push_back(to_string(parse_rational(c)));
      for (const auto& c : g_p2) p2.push_back(to_string(parse_rational(c)));
      config = {{"command", "gen"},   {"p1", p1},         {"p2", p2},       {"start", g_start},
                {"length", g_length}, {"perturb", perturb}, {"format", g_format}};
    } else {
      err << app.help();
      return kUsage;
    }

    const Outcome outcome = execute(config);
    if (output.empty()) {
      out << outcome.document;
    } else {
      write_atomically(output, outcome.document);
    }
    return outcome.exit_code;
  } catch (const IoError& e) {
    err << "intval: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    err << "intval: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "intval: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace intval::cli
