// steengraph: command-line front end.
//
//   steengraph analyze  -n 3 "xi1^15 xi3^2" [--json] [--dot out.dot] [--directed]
//   steengraph dot      -n 2 "xi1^6 xi2 xi3" [--directed] [--dot out.dot]
//   steengraph hopf     antipode --i 2 --j 0 -n 3
//   steengraph enumerate -n 2 [--compact]
//   steengraph verify   -n 2 --theorem main [--threads 4] [--json]
//
// Exit codes: 0 success, 1 a criterion disagrees with its oracle, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "steengraph/algebra.hpp"
#include "steengraph/hopf.hpp"
#include "steengraph/report.hpp"
#include "steengraph/verify.hpp"
#include "steengraph/wood_graph.hpp"

namespace {

using namespace steengraph;

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  int n = -1;
  bool json = false;
  std::string dot_path;
  bool directed = false;
};

TruncationLevel level_from(const GlobalFlags& flags) {
  if (flags.n < 0) throw UsageError("-n <int> is required");
  try {
    return TruncationLevel::truncated(flags.n);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int run_analyze(const GlobalFlags& flags, const std::string& text) {
  const Monomial x = parse_monomial(text, level_from(flags));
  const AnalysisReport report = analyze(x);
  std::cout << (flags.json ? to_json(report) : to_text(report));
  if (!flags.dot_path.empty()) write_file(flags.dot_path, export_dot(to_graph(x), flags.directed));
  return report.mismatches.empty() ? kExitOk : kExitDiscrepancy;
}

int run_dot(const GlobalFlags& flags, const std::string& text) {
  const Monomial x = parse_monomial(text, level_from(flags));
  const std::string dot = export_dot(to_graph(x), flags.directed);
  if (flags.dot_path.empty()) {
    std::cout << dot;
  } else {
    write_file(flags.dot_path, dot);
  }
  return kExitOk;
}

int run_hopf(const GlobalFlags& flags, const std::string& action, int i, int j) {
  const TruncationLevel level = level_from(flags);
  try {
    if (action == "coproduct") {
      std::cout << coproduct_generator(i, j, level).to_string() << "\n";
    } else if (action == "antipode") {
      std::cout << antipode(Monomial::generator_power(level, i, j)).to_string() << "\n";
    } else if (action == "paths") {
      std::cout << directed_path_polynomial(j, i, level).to_string() << "\n";
    } else {
      throw UsageError("unknown hopf action '" + action + "' (coproduct, antipode, paths)");
    }
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int run_enumerate(const GlobalFlags& flags, bool compact) {
  for (const Monomial& m : enumerate_monomials(level_from(flags))) {
    std::cout << (compact ? m.to_compact_string() : m.to_string()) << "\n";
  }
  return kExitOk;
}

int sweep_cap(Claim claim) {
  if (const char* env = std::getenv("STEENGRAPH_MAX_N")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 0) throw UsageError("STEENGRAPH_MAX_N must be a nonnegative integer");
    return static_cast<int>(std::min<long>(value, kMaxTruncation));
  }
  return default_cap(claim);
}

nlohmann::ordered_json sweep_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = std::string(claim_name(r.claim));
  j["n"] = r.n;
  j["statement"] = std::string(claim_statement(r.claim));
  j["cases"] = r.cases;
  j["discrepancies"] = r.discrepancies;
  j["witnesses"] = r.witnesses;
  j["informational"] = is_informational(r.claim);
  j["finding_count"] = r.finding_count;
  j["findings"] = r.findings;
  j["note"] = r.note;
  j["passed"] = r.passed();
  return j;
}

void print_sweep(const SweepReport& r) {
  const bool info = is_informational(r.claim);
  const char* tag = !r.passed() ? "FAIL" : info ? "INFO" : "PASS";
  std::cout << "[" << tag << "] " << claim_name(r.claim) << " n=" << r.n << ": " << r.cases << " cases, "
            << r.discrepancies << " discrepancies -- " << claim_statement(r.claim) << "\n";
  for (const auto& w : r.witnesses) std::cout << "    discrepancy: " << w << "\n";
  if (!r.note.empty()) std::cout << "    " << r.note << "\n";
  if (info) {
    for (const auto& f : r.findings) std::cout << "    counterexample: " << f << "\n";
  } else {
    for (const auto& f : r.findings) std::cout << "    note: " << f << "\n";
  }
}

int run_verify(const GlobalFlags& flags, const std::string& selector, unsigned threads, int i_max) {
  std::vector<Claim> claims;
  if (selector == "all") {
    claims = all_claims();
  } else if (auto c = claim_from_name(selector)) {
    claims.push_back(*c);
  } else {
    std::string names;
    for (Claim c : all_claims()) names += " " + std::string(claim_name(c));
    throw UsageError("unknown theorem '" + selector + "'; choose all or one of:" + names);
  }

  SweepOptions options;
  options.threads = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
  options.antipode_recursion_depth = i_max;

  std::vector<std::pair<Claim, int>> runs;
  for (Claim c : claims) {
    const int cap = sweep_cap(c);
    if (c == Claim::AntipodeRecursion) {
      runs.emplace_back(c, 0);
      continue;
    }
    if (flags.n > cap) {
      throw UsageError("n=" + std::to_string(flags.n) + " exceeds the cap " + std::to_string(cap) + " for '" +
                       std::string(claim_name(c)) + "'; set STEENGRAPH_MAX_N to raise it");
    }
    if (flags.n >= 0) {
      runs.emplace_back(c, flags.n);
    } else {
      for (int n = 0; n <= cap; ++n) runs.emplace_back(c, n);
    }
  }

  bool ok = true;
  auto out = nlohmann::ordered_json::array();
  for (const auto& [claim, n] : runs) {
    const SweepReport r = run_sweep(claim, n, options);
    ok = ok && r.passed();
    if (flags.json) {
      out.push_back(sweep_json(r));
    } else {
      print_sweep(r);
    }
  }
  if (flags.json) std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wood graphs of the truncated dual Steenrod algebras A*(n)", "steengraph"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("-n", flags.n, "truncation level n of A*(n)");
  app.add_flag("--json", flags.json, "emit JSON");
  app.add_option("--dot", flags.dot_path, "write Graphviz output to this path");
  app.add_flag("--directed", flags.directed, "orient edges toward the larger vertex");

  std::string monomial_text;
  auto* analyze = app.add_subcommand("analyze", "report every criterion and oracle for one monomial");
  analyze->add_option("monomial", monomial_text, "e.g. \"xi1^15 xi3^2\" or [15,0,2,0]")->required();

  std::string dot_text;
  auto* dot = app.add_subcommand("dot", "print the Wood graph of a monomial as Graphviz");
  dot->add_option("monomial", dot_text)->required();

  std::string action;
  int gen_i = 1;
  int gen_j = 0;
  auto* hopf = app.add_subcommand("hopf", "expand coproduct, antipode or directed paths of xi_i^(2^j)");
  hopf->add_option("action", action, "coproduct | antipode | paths")->required();
  hopf->add_option("--i", gen_i, "generator index i >= 1");
  hopf->add_option("--j", gen_j, "power index j >= 0");

  bool compact = false;
  auto* enumerate = app.add_subcommand("enumerate", "list every monomial of A*(n)");
  enumerate->add_flag("--compact", compact, "print exponent vectors");

  std::string selector = "all";
  unsigned threads = 1;
  int i_max = 8;
  auto* verify = app.add_subcommand("verify", "exhaustively compare criteria with oracles");
  verify->add_option("--theorem", selector, "which claim to sweep, or all");
  verify->add_option("--threads", threads, "worker threads (0 = hardware)");
  verify->add_option("--i-max", i_max, "depth for antipode-recursion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(flags, monomial_text);
    if (*dot) return run_dot(flags, dot_text);
    if (*hopf) return run_hopf(flags, action, gen_i, gen_j);
    if (*enumerate) return run_enumerate(flags, compact);
    if (*verify) return run_verify(flags, selector, threads, i_max);
  } catch (const ParseError& e) {
    std::cerr << "steengraph: parse error at '" << e.token() << "': " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "steengraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "steengraph: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
