// Command-line surface for the Galois-cover verification pipeline.
//
//   galcov verify --k K [--max-cosets N] [--strategy hlt|felsch]
//                 [--no-simplify] [--out FILE]
//   galcov batch  --k-from A --k-to B [--out-dir DIR] [...]
//   galcov emit   factorization|presentation --k K [--stage raw|g1|simplified]
//                 [--format text|json] [--out FILE]
//
// Requested artifacts go to standard output (or --out); diagnostics go
// to standard error.  Exit codes: 0 verified trivial fundamental group,
// 2 mathematical mismatch, 3 coset budget overflow, 4 invalid
// arguments, 1 internal error.  The environment variable
// GALCOV_MAX_COSETS overrides the default coset budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "galcov/coset_enumeration.hpp"
#include "galcov/factorization.hpp"
#include "galcov/invariants.hpp"
#include "galcov/presentation.hpp"
#include "galcov/tietze.hpp"
#include "galcov/verification.hpp"
#include "galcov/words.hpp"

namespace {

int log_verbosity = 1;  // 0 quiet, 1 info, 2 debug

void log_info(const std::string& msg) {
  if (log_verbosity >= 1) std::cerr << "[galcov] " << msg << "\n";
}

long long default_budget() {
  const char* env = std::getenv("GALCOV_MAX_COSETS");
  if (env != nullptr) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0 &&
        v <= 9000000000000000000ULL) {
      return static_cast<long long>(v);
    }
    std::cerr << "[galcov] warning: ignoring invalid GALCOV_MAX_COSETS='"
              << env << "'\n";
  }
  return 1000000;
}

galcov::Strategy strategy_of(const std::string& name) {
  return name == "felsch" ? galcov::Strategy::definition_eager
                          : galcov::Strategy::relator_scan;
}

// Writes payload to the file at path, or to standard output if path is
// empty.  Returns false (after logging) if the file cannot be written.
bool sink(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "[galcov] error: cannot write '" << path << "'\n";
    return false;
  }
  out << payload;
  return true;
}

std::string relator_text(const galcov::Presentation& p, const galcov::Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += ' ';
    const int g = std::abs(w[i]);
    s += p.names[static_cast<std::size_t>(g)];
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

std::string presentation_json_text(const galcov::Presentation& p) {
  nlohmann::ordered_json j;
  j["num_gens"] = p.num_gens;
  j["names"] = std::vector<std::string>(p.names.begin() + 1, p.names.end());
  nlohmann::ordered_json rels = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    nlohmann::ordered_json rel;
    rel["tag"] = i < p.tags.size() ? p.tags[i] : "";
    rel["word"] = p.relators[i];
    rel["text"] = relator_text(p, p.relators[i]);
    rels.push_back(rel);
  }
  j["relators"] = rels;
  return j.dump(2) + "\n";
}

std::string factorization_json_text(const std::vector<galcov::AtomicFactor>& fs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const galcov::AtomicFactor& f : fs) {
    nlohmann::ordered_json e;
    e["tag"] = f.tag;
    e["twist"] = galcov::twist_token(
        galcov::Twist{f.a, f.b, 1, f.side});
    e["side"] = f.side == galcov::Side::below ? "below" : "above";
    e["power"] = f.power;
    nlohmann::ordered_json conj = nlohmann::ordered_json::array();
    for (const galcov::Twist& t : f.conj) conj.push_back(galcov::twist_token(t));
    e["conj"] = conj;
    arr.push_back(e);
  }
  return arr.dump(2) + "\n";
}

int run_verify(int k, long long max_cosets, const std::string& strategy,
               bool simplify, const std::string& out_path) {
  if (k < 4) {
    std::cerr << "[galcov] error: verify requires --k >= 4 (got " << k
              << ")\n";
    return 4;
  }
  galcov::VerifyOptions opt;
  opt.max_cosets = static_cast<std::size_t>(max_cosets);
  opt.strategy = strategy_of(strategy);
  opt.simplify = simplify;
  log_info("verify k=" + std::to_string(k) +
           " max_cosets=" + std::to_string(max_cosets) + " strategy=" +
           strategy + (simplify ? " simplify=on" : " simplify=off"));

  const galcov::VerificationReport r = galcov::verify_simply_connected(k, opt);
  log_info("factorization: " + std::to_string(r.factor_count) +
           " atomic factors, exponent sum " + std::to_string(r.exponent_sum));
  log_info("presentation: " + std::to_string(r.relator_count) + " relators");
  if (r.g1_order.has_value()) {
    log_info("enumeration: |G1| = " + std::to_string(*r.g1_order) +
             " (expected " + r.expected_order.str() + "), peak live cosets " +
             std::to_string(r.max_cosets_used));
  } else {
    log_info("enumeration: coset budget of " + std::to_string(max_cosets) +
             " exhausted");
  }
  log_info(std::string("verdict: pi1_trivial=") +
           (r.pi1_trivial ? "true" : "false"));

  if (!sink(galcov::report_json(r), out_path)) return 1;
  if (!r.g1_order.has_value()) return 3;
  return r.pi1_trivial ? 0 : 2;
}

std::string summary_line(const galcov::VerificationReport& r,
                         const std::string& verdict) {
  std::ostringstream line;
  line << "k=" << r.k << " expected=" << r.expected_order.str()
       << " g1_order="
       << (r.g1_order.has_value() ? std::to_string(*r.g1_order) : "null")
       << " c1_squared=" << r.c1_squared.str()
       << " classification=" << r.classification << " verdict=" << verdict;
  return line.str();
}

int run_batch(int k_from, int k_to, const std::string& out_dir,
              long long max_cosets, const std::string& strategy,
              bool simplify) {
  if (k_from < 4 || k_from > k_to) {
    std::cerr << "[galcov] error: batch requires 4 <= --k-from <= --k-to\n";
    return 4;
  }
  galcov::VerifyOptions opt;
  opt.max_cosets = static_cast<std::size_t>(max_cosets);
  opt.strategy = strategy_of(strategy);
  opt.simplify = simplify;

  std::vector<std::string> lines;
  bool any_overflow = false;
  bool any_mismatch = false;
  for (int k = k_from; k <= k_to; ++k) {
    log_info("batch: verifying k=" + std::to_string(k));
    const galcov::VerificationReport r =
        galcov::verify_simply_connected(k, opt);
    const std::string path =
        out_dir + "/report_k" + std::to_string(k) + ".json";
    if (!sink(galcov::report_json(r), path)) return 1;
    std::string verdict = "ok";
    if (!r.g1_order.has_value()) {
      verdict = "overflow";
      any_overflow = true;
    } else if (!r.pi1_trivial) {
      verdict = "mismatch";
      any_mismatch = true;
    }
    lines.push_back(summary_line(r, verdict));
  }

  std::string table;
  for (const std::string& line : lines) table += line + "\n";
  if (!sink(table, out_dir + "/summary.txt")) return 1;
  std::cout << table;
  if (any_mismatch) return 2;
  if (any_overflow) return 3;
  return 0;
}

int run_emit(const std::string& kind, int k, const std::string& stage,
             const std::string& format, const std::string& out_path) {
  if (k < 4) {
    std::cerr << "[galcov] error: emit requires --k >= 4 (got " << k << ")\n";
    return 4;
  }
  std::string payload;
  if (kind == "factorization") {
    const std::vector<galcov::AtomicFactor> atoms =
        galcov::expand(galcov::full_factorization(k));
    log_info("emit factorization k=" + std::to_string(k) + ": " +
             std::to_string(atoms.size()) + " atomic factors");
    payload = format == "json" ? factorization_json_text(atoms)
                               : galcov::factorization_text(atoms);
  } else {
    galcov::Presentation p = galcov::presentation_G(k);
    if (stage != "raw") p = galcov::presentation_G1(p);
    if (stage == "simplified") p = galcov::tietze_simplify(p);
    log_info("emit presentation k=" + std::to_string(k) + " stage=" + stage +
             ": " + std::to_string(p.num_gens) + " generators, " +
             std::to_string(p.relators.size()) + " relators");
    payload = format == "json" ? presentation_json_text(p)
                               : galcov::presentation_text(p);
  }
  return sink(payload, out_path) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Braid monodromy factorizations, branch-curve group presentations, "
      "and simple-connectivity certificates for Galois covers of "
      "chain-of-planes degenerations"};
  app.require_subcommand(1);
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "quiet, info, or debug")
      ->check(CLI::IsMember({"quiet", "info", "debug"}));

  int k = 0;
  long long max_cosets = default_budget();
  std::string strategy = "hlt";
  bool no_simplify = false;
  std::string out_path;

  CLI::App* verify = app.add_subcommand(
      "verify", "Verify that the Galois cover for k planes is simply connected");
  verify->fallthrough();
  verify->add_option("--k", k, "number of planes (>= 4)")->required();
  verify->add_option("--max-cosets", max_cosets, "live-coset budget");
  verify->add_option("--strategy", strategy, "coset strategy: hlt or felsch")
      ->check(CLI::IsMember({"hlt", "felsch"}));
  verify->add_flag("--no-simplify", no_simplify,
                   "enumerate the unsimplified presentation");
  verify->add_option("--out", out_path, "report file (default: stdout)");

  int k_from = 0;
  int k_to = 0;
  std::string out_dir = ".";
  CLI::App* batch =
      app.add_subcommand("batch", "Verify a range of k values");
  batch->fallthrough();
  batch->add_option("--k-from", k_from, "first k (>= 4)")->required();
  batch->add_option("--k-to", k_to, "last k")->required();
  batch->add_option("--out-dir", out_dir, "directory for reports and summary");
  batch->add_option("--max-cosets", max_cosets, "live-coset budget");
  batch->add_option("--strategy", strategy, "coset strategy: hlt or felsch")
      ->check(CLI::IsMember({"hlt", "felsch"}));
  batch->add_flag("--no-simplify", no_simplify,
                  "enumerate the unsimplified presentations");

  std::string kind;
  std::string stage = "raw";
  std::string format = "text";
  CLI::App* emit = app.add_subcommand(
      "emit", "Export a factorization or presentation deterministically");
  emit->fallthrough();
  emit->add_option("kind", kind, "factorization or presentation")
      ->required()
      ->check(CLI::IsMember({"factorization", "presentation"}));
  emit->add_option("--k", k, "number of planes (>= 4)")->required();
  emit->add_option("--stage", stage,
                   "presentation stage: raw, g1, or simplified")
      ->check(CLI::IsMember({"raw", "g1", "simplified"}));
  emit->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  emit->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "[galcov] error: " << e.what() << "\n";
    return 4;
  }

  log_verbosity = log_level == "quiet" ? 0 : log_level == "debug" ? 2 : 1;

  try {
    if (verify->parsed())
      return run_verify(k, max_cosets, strategy, !no_simplify, out_path);
    if (batch->parsed())
      return run_batch(k_from, k_to, out_dir, max_cosets, strategy,
                       !no_simplify);
    if (emit->parsed()) return run_emit(kind, k, stage, format, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "[galcov] error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "[galcov] internal error: " << e.what() << "\n";
    return 1;
  }
  return 4;
}
