// Command-line front end. Every engine operation is exposed as a subcommand
// with exact rational input/output; --json switches to the machine-readable
// schema documented in the README and --verify cross-checks single-vector
// results against the brute-force oracle.
//
// Exit codes: 0 success, 1 verification or example failure, 2 invalid input.

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricmld/errors.hpp"
#include "toricmld/fibration.hpp"
#include "toricmld/lattice.hpp"
#include "toricmld/oracle.hpp"
#include "toricmld/scan.hpp"
#include "toricmld/verify.hpp"
#include "toricmld/weighted_blowup.hpp"

namespace {

using namespace toricmld;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInvalidInput = 2;

// Comma-separated integers, no whitespace anywhere in the list.
std::vector<Int> parse_int_list(const std::string& text) {
  if (text.empty()) throw ParseError("empty vector");
  std::vector<Int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_int(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational parse_eps(const std::string& text) {
  const Rational eps = parse_rational(text);
  if (eps <= 0) throw NonpositiveEpsilonError("eps must be > 0");
  return eps;
}

ordered_json int_json(const Int& v) {
  constexpr std::int64_t lo = std::numeric_limits<std::int64_t>::min();
  constexpr std::int64_t hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return ordered_json(v.convert_to<std::int64_t>());
  return ordered_json(v.str());
}

ordered_json rational_json(const Rational& q) {
  return ordered_json{{"num", int_json(numerator(q))}, {"den", int_json(denominator(q))}};
}

ordered_json vector_json(const LatticeVector& v) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(int_json(v[i]));
  return a;
}

ordered_json decomposition_json(const Decomposition& dec) {
  ordered_json j;
  j["j"] = dec.dropped_index;
  j["a"] = rational_json(dec.ray_coeff);
  ordered_json b = ordered_json::array();
  for (const Rational& c : dec.basis_coeffs) b.push_back(rational_json(c));
  j["b"] = std::move(b);
  return j;
}

ordered_json prime_decomposition_json(const PrimeDecomposition& dec, std::size_t dim) {
  ordered_json j;
  j["dropped"] = generator_name(dec.dropped_generator, dim);
  j["a"] = rational_json(dec.ray_coeff);
  ordered_json coeffs = ordered_json::array();
  std::size_t pos = 0;
  for (std::size_t t = 0; t < dim; ++t) {
    if (t == dec.dropped_generator) continue;
    ordered_json entry;
    entry["generator"] = generator_name(t, dim);
    entry["value"] = rational_json(dec.generator_coeffs[pos++]);
    coeffs.push_back(std::move(entry));
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

struct OutputSink {
  bool json = false;
  std::optional<std::string> out_path;

  void deliver(const std::string& payload) const {
    if (out_path) {
      std::ofstream out(*out_path, std::ios::binary | std::ios::trunc);
      if (!out) throw InputError("cannot write output file '" + *out_path + "'");
      out << payload;
      if (!payload.empty() && payload.back() != '\n') out << '\n';
    } else {
      std::cout << payload;
      if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    }
  }
};

// Returns the process exit code after a verification comparison.
int report_verification(ordered_json& j, bool json_mode, bool match,
                        const std::string& what, const Rational& engine,
                        const Rational& reference) {
  if (json_mode) j["verified"] = match;
  if (!match) {
    std::cerr << "verification failed: " << what << ": engine " << to_string(engine)
              << " vs oracle " << to_string(reference) << "\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

std::string witness_text(const std::optional<LatticeVector>& witness) {
  return witness ? to_string(*witness) : std::string("generator");
}

ordered_json witness_json(const std::optional<LatticeVector>& witness) {
  if (witness) return vector_json(*witness);
  return ordered_json("generator");
}

int run(int argc, char** argv) {
  CLI::App app{"exact invariants of toric weighted blowups and fibration fans"};
  app.require_subcommand(1);

  bool json_mode = false;
  bool verify = false;
  std::optional<std::string> out_path;
  app.add_flag("--json", json_mode, "emit machine-readable JSON on stdout");
  app.add_flag("--verify", verify, "cross-check the result against the brute-force oracle");
  app.add_option("--out", out_path, "write the primary output to a file instead of stdout");

  std::string m_text, n_text, c_text, eps_text, t_text = "0";
  std::size_t axis = 0;
  std::size_t scan_dim = 0;
  std::string bound_text, n1_bound_text, coeff_bound_text;
  unsigned workers = 1;
  std::uint64_t checkpoint_every = 10000;
  std::optional<std::string> checkpoint_path, resume_path, csv_path;
  std::optional<std::uint64_t> max_records;
  bool self_test = false;

  const auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", n_text, "weight vector, comma-separated integers")->required();
  };

  CLI::App* cmd_alpha = app.add_subcommand("alpha", "log discrepancy on a weighted blowup");
  cmd_alpha->add_option("--m", m_text, "lattice point, comma-separated integers")->required();
  add_n(cmd_alpha);

  CLI::App* cmd_alpha_prime =
      app.add_subcommand("alpha-prime", "log discrepancy on a fibration fan");
  cmd_alpha_prime->add_option("--m", m_text, "lattice point")->required();
  add_n(cmd_alpha_prime);

  CLI::App* cmd_mld = app.add_subcommand("mld", "minimal log discrepancy, blowup side");
  add_n(cmd_mld);

  CLI::App* cmd_mld_prime =
      app.add_subcommand("mld-prime", "minimal log discrepancy, fibration side");
  add_n(cmd_mld_prime);

  CLI::App* cmd_is_elc = app.add_subcommand("is-elc", "epsilon-lc test, blowup side");
  add_n(cmd_is_elc);
  cmd_is_elc->add_option("--eps", eps_text, "threshold, 'p/q' or integer")->required();

  CLI::App* cmd_is_elc_prime =
      app.add_subcommand("is-elc-prime", "epsilon-lc test, fibration side");
  add_n(cmd_is_elc_prime);
  cmd_is_elc_prime->add_option("--eps", eps_text, "threshold, 'p/q' or integer")->required();

  CLI::App* cmd_lct =
      app.add_subcommand("lct", "lc threshold of a coordinate-hyperplane pullback");
  add_n(cmd_lct);
  cmd_lct->add_option("--i", axis, "hyperplane index, 1-based")->required();

  CLI::App* cmd_pullback =
      app.add_subcommand("pullback-mult", "exceptional multiplicity in a hyperplane pullback");
  add_n(cmd_pullback);
  cmd_pullback->add_option("--i", axis, "hyperplane index, 1-based")->required();

  CLI::App* cmd_fiber =
      app.add_subcommand("fiber-mult", "multiplicity of the central fibre");
  add_n(cmd_fiber);

  CLI::App* cmd_class =
      app.add_subcommand("relative-class", "relative divisor class of t*T + sum c_i*H_i~");
  cmd_class->add_option("--t", t_text, "coefficient of the exceptional divisor");
  cmd_class->add_option("--c", c_text, "coefficients of the strict transforms")->required();
  add_n(cmd_class);

  CLI::App* cmd_scan_blowup =
      app.add_subcommand("scan-blowup", "exhaustive blowup-weight scan");
  cmd_scan_blowup->add_option("--d", scan_dim, "dimension, >= 2")->required();
  cmd_scan_blowup->add_option("--eps", eps_text, "qualification threshold")->required();
  cmd_scan_blowup->add_option("--bound", bound_text, "max weight entry")->required();

  CLI::App* cmd_scan_fibration =
      app.add_subcommand("scan-fibration", "exhaustive fibration-weight scan");
  cmd_scan_fibration->add_option("--d", scan_dim, "dimension, >= 2")->required();
  cmd_scan_fibration->add_option("--eps", eps_text, "qualification threshold")->required();
  cmd_scan_fibration->add_option("--n1-bound", n1_bound_text, "max n_1")->required();
  cmd_scan_fibration->add_option("--coeff-bound", coeff_bound_text, "max |n_i|, i >= 2")
      ->required();

  for (CLI::App* scan : {cmd_scan_blowup, cmd_scan_fibration}) {
    scan->add_option("--workers", workers, "parallel workers (default 1)");
    scan->add_option("--checkpoint", checkpoint_path, "write checkpoints to this file");
    scan->add_option("--checkpoint-every", checkpoint_every,
                     "records between checkpoints (default 10000)");
    scan->add_option("--resume", resume_path, "resume from a checkpoint file");
    scan->add_option("--max-records", max_records,
                     "stop after this many records (writes a checkpoint)");
    scan->add_option("--csv", csv_path, "write the per-record CSV table to a file");
  }

  CLI::App* cmd_verify_examples =
      app.add_subcommand("verify-examples", "run the built-in exact reference table");
  cmd_verify_examples->add_flag(
      "--self-test", self_test,
      "append a deliberately failing row to prove the failure path");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  const OutputSink sink{json_mode, out_path};

  const auto blowup_weights = [&] {
    return WeightVector(LatticeVector(parse_int_list(n_text)), WeightMode::blowup);
  };
  const auto fibration_weights = [&] {
    return WeightVector(LatticeVector(parse_int_list(n_text)), WeightMode::fibration);
  };

  if (cmd_alpha->parsed()) {
    const LatticeVector m(parse_int_list(m_text));
    const WeightVector n = blowup_weights();
    const Decomposition dec = decompose(m, n);
    int code = kExitOk;
    ordered_json j;
    j["input"] = ordered_json{{"m", vector_json(m)}, {"n", vector_json(n.vec())}};
    j["value"] = rational_json(dec.value);
    j["decomposition"] = decomposition_json(dec);
    if (verify)
      code = report_verification(j, json_mode, oracle::alpha_value(m, n) == dec.value,
                                 "alpha", dec.value, oracle::alpha_value(m, n));
    sink.deliver(json_mode ? j.dump() : to_string(dec.value));
    return code;
  }

  if (cmd_alpha_prime->parsed()) {
    const LatticeVector m(parse_int_list(m_text));
    const WeightVector n = fibration_weights();
    const PrimeDecomposition dec = alpha_prime(m, n);
    int code = kExitOk;
    ordered_json j;
    j["input"] = ordered_json{{"m", vector_json(m)}, {"n", vector_json(n.vec())}};
    j["value"] = rational_json(dec.value);
    j["decomposition"] = prime_decomposition_json(dec, n.dim());
    if (verify)
      code = report_verification(j, json_mode,
                                 oracle::alpha_prime_value(m, n) == dec.value,
                                 "alpha'", dec.value, oracle::alpha_prime_value(m, n));
    sink.deliver(json_mode ? j.dump() : to_string(dec.value));
    return code;
  }

  if (cmd_mld->parsed()) {
    const WeightVector n = blowup_weights();
    const MldReport rep = mld(n);
    int code = kExitOk;
    ordered_json j;
    j["input"] = ordered_json{{"n", vector_json(n.vec())}};
    j["value"] = rational_json(rep.value);
    j["witness"] = witness_json(rep.witness);
    if (verify) {
      const Rational ref = oracle::mld_bruteforce(n, n.max_entry()).value;
      code = report_verification(j, json_mode, ref == rep.value, "mld", rep.value, ref);
    }
    sink.deliver(json_mode ? j.dump()
                           : to_string(rep.value) + "\nwitness: " + witness_text(rep.witness));
    return code;
  }

  if (cmd_mld_prime->parsed()) {
    const WeightVector n = fibration_weights();
    const MldPrimeReport rep = mld_prime(n);
    int code = kExitOk;
    ordered_json j;
    j["input"] = ordered_json{{"n", vector_json(n.vec())}};
    j["value"] = rational_json(rep.value);
    j["witness"] = witness_json(rep.witness);
    if (verify) {
      const Rational ref =
          oracle::mld_prime_bruteforce(n, n.max_abs_entry() + Int(n.dim())).value;
      code = report_verification(j, json_mode, ref == rep.value, "mld'", rep.value, ref);
    }
    sink.deliver(json_mode ? j.dump()
                           : to_string(rep.value) + "\nwitness: " + witness_text(rep.witness));
    return code;
  }

  if (cmd_is_elc->parsed() || cmd_is_elc_prime->parsed()) {
    const bool prime = cmd_is_elc_prime->parsed();
    const Rational eps = parse_eps(eps_text);
    const WeightVector n = prime ? fibration_weights() : blowup_weights();
    Rational value;
    ordered_json witness;
    if (prime) {
      const MldPrimeReport rep = mld_prime(n);
      value = rep.value;
      witness = witness_json(rep.witness);
    } else {
      const MldReport rep = mld(n);
      value = rep.value;
      witness = witness_json(rep.witness);
    }
    const bool elc = value >= eps;
    int code = kExitOk;
    ordered_json j;
    j["input"] = ordered_json{{"n", vector_json(n.vec())}, {"eps", rational_json(eps)}};
    j["value"] = rational_json(value);
    j["witness"] = std::move(witness);
    j["elc"] = elc;
    if (verify) {
      const Rational ref =
          prime ? oracle::mld_prime_bruteforce(n, n.max_abs_entry() + Int(n.dim())).value
                : oracle::mld_bruteforce(n, n.max_entry()).value;
      code = report_verification(j, json_mode, ref == value, prime ? "mld'" : "mld",
                                 value, ref);
    }
    sink.deliver(json_mode ? j.dump() : std::string(elc ? "true" : "false"));
    return code;
  }

  if (cmd_lct->parsed()) {
    const WeightVector n = blowup_weights();
    const Rational value = lct_hyperplane(n, axis);
    int code = kExitOk;
    ordered_json j;
    j["input"] = ordered_json{{"n", vector_json(n.vec())}, {"i", axis}};
    j["value"] = rational_json(value);
    if (verify) {
      const Rational ref = oracle::lct_bruteforce(n, axis, n.max_entry());
      code = report_verification(j, json_mode, ref == value, "lct", value, ref);
    }
    sink.deliver(json_mode ? j.dump() : to_string(value));
    return code;
  }

  if (cmd_pullback->parsed()) {
    const WeightVector n = blowup_weights();
    const Int value = pullback_multiplicity(n, axis);
    ordered_json j;
    j["input"] = ordered_json{{"n", vector_json(n.vec())}, {"i", axis}};
    j["value"] = rational_json(Rational(value));
    if (verify)
      std::cerr << "note: no oracle for pullback-mult; nothing to cross-check\n";
    sink.deliver(json_mode ? j.dump() : value.str());
    return kExitOk;
  }

  if (cmd_fiber->parsed()) {
    const WeightVector n = fibration_weights();
    const Int value = fiber_multiplicity(n);
    ordered_json j;
    j["input"] = ordered_json{{"n", vector_json(n.vec())}};
    j["value"] = rational_json(Rational(value));
    if (verify)
      std::cerr << "note: no oracle for fiber-mult; nothing to cross-check\n";
    sink.deliver(json_mode ? j.dump() : value.str());
    return kExitOk;
  }

  if (cmd_class->parsed()) {
    const Int t = parse_int(t_text);
    const LatticeVector c(parse_int_list(c_text));
    const WeightVector n = blowup_weights();
    const Int value = relative_class(t, c, n);
    ordered_json j;
    j["input"] = ordered_json{{"t", int_json(t)}, {"c", vector_json(c)},
                              {"n", vector_json(n.vec())}};
    j["value"] = rational_json(Rational(value));
    if (verify)
      std::cerr << "note: no oracle for relative-class; nothing to cross-check\n";
    sink.deliver(json_mode ? j.dump() : value.str());
    return kExitOk;
  }

  if (cmd_scan_blowup->parsed() || cmd_scan_fibration->parsed()) {
    const bool blowup_scan = cmd_scan_blowup->parsed();
    ScanParams params;
    params.mode = blowup_scan ? ScanMode::blowup : ScanMode::fibration;
    params.dim = scan_dim;
    params.eps = parse_eps(eps_text);
    if (blowup_scan) {
      params.weight_bound = parse_int(bound_text);
    } else {
      params.n1_bound = parse_int(n1_bound_text);
      params.coeff_bound = parse_int(coeff_bound_text);
    }

    ScanOptions options;
    options.workers = workers;
    options.checkpoint_path = checkpoint_path;
    options.checkpoint_every = checkpoint_every;
    options.max_records = max_records;

    std::optional<Checkpoint> resume;
    if (resume_path) {
      resume = load_checkpoint(*resume_path);
      if (!(resume->params == params))
        throw CorruptCheckpointError(
            "checkpoint parameters do not match the requested scan");
      if (!options.checkpoint_path) options.checkpoint_path = resume_path;
    }

    const ScanReport report = blowup_scan ? scan_blowup(params, options, resume)
                                          : scan_fibration(params, options, resume);
    if (csv_path) {
      std::ofstream csv(*csv_path, std::ios::binary | std::ios::trunc);
      if (!csv) throw InputError("cannot write CSV file '" + *csv_path + "'");
      csv << report_csv(report);
    }
    sink.deliver(json_mode ? report_json(report) : report_text(report));
    return kExitOk;
  }

  if (cmd_verify_examples->parsed()) {
    std::vector<ExampleResult> rows = run_reference_examples();
    if (self_test)
      rows.push_back(check_rational("self-test (expected failure)", Rational(1),
                                    make_rational(1, 2)));
    std::size_t failed = 0;
    std::string text;
    for (const ExampleResult& r : rows) {
      if (r.pass) {
        text += "PASS " + r.name + " = " + r.actual + "\n";
      } else {
        ++failed;
        text += "FAIL " + r.name + ": expected " + r.expected + ", got " + r.actual + "\n";
      }
    }
    text += std::to_string(rows.size() - failed) + "/" + std::to_string(rows.size()) +
            " examples passed\n";
    if (json_mode) {
      ordered_json j;
      ordered_json results = ordered_json::array();
      for (const ExampleResult& r : rows)
        results.push_back(ordered_json{{"name", r.name},
                                       {"expected", r.expected},
                                       {"actual", r.actual},
                                       {"pass", r.pass}});
      j["results"] = std::move(results);
      j["passed"] = rows.size() - failed;
      j["failed"] = failed;
      sink.deliver(j.dump());
    } else {
      sink.deliver(text);
    }
    return failed == 0 ? kExitOk : kExitVerifyFailure;
  }

  std::cerr << "error: no subcommand\n";
  return kExitInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
}
