#include "steengraph/verify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <thread>

#include "steengraph/connectivity.hpp"
#include "steengraph/hopf.hpp"
#include "steengraph/structure.hpp"
#include "steengraph/wood_graph.hpp"

namespace steengraph {

namespace {

struct ClaimInfo {
  Claim claim;
  std::string_view name;
  std::string_view statement;
  int cap;
};

constexpr std::array<ClaimInfo, 13> kClaims{{
    {Claim::Connected, "main", "walk counts C(p,q) > 0 for all p<q  <=>  BFS reaches every vertex", 4},
    {Claim::Unilateral, "unilateral", "walk counts U(p,q) > 0 for all p<q  <=>  every vertex pair is comparable", 4},
    {Claim::Tree, "tree", "connected with sum alpha(r_i) = n+1  <=>  connected and DFS-acyclic", 4},
    {Claim::DirectedPath, "dipath", "r_1 = 2^(n+1)-1  <=>  spanning directed path, which is 1->2->...->2^(n+1)", 4},
    {Claim::Dirac, "dirac", "every degree >= (n+2)/2  =>  Hamilton cycle", 3},
    {Claim::PaperHamilton, "paper-hamilton", "every degree >= n/2  =>  Hamilton cycle (findings only)", 3},
    {Claim::Degrees, "degrees", "dyadic degree counts = adjacency row/column sums; handshake", 3},
    {Claim::Corollary, "corollary", "some summand of each c(xi_i^(2^j)) divides x edgewise  <=>  unilateral", 3},
    {Claim::AntipodePaths, "antipode-paths", "c(xi_i^(2^j)) = sum of directed paths 2^j -> 2^(i+j)", 4},
    {Claim::CoproductPaths, "coproduct-paths", "middle terms of D(xi_i^(2^j)) = length-2 directed paths", 4},
    {Claim::HopfAxioms, "hopf-axioms", "counit laws, coassociativity, antipode identity", 3},
    {Claim::HopfIdeal, "hopf-ideal", "D, c and e of the generators of I(n) vanish in A*(n)", 3},
    {Claim::AntipodeRecursion, "antipode-recursion", "sum_k xi_(i-k)^(2^k) c(xi_k) = 0 in A*", kMaxTruncation},
}};

const ClaimInfo& info(Claim claim) {
  for (const auto& c : kClaims) {
    if (c.claim == claim) return c;
  }
  throw std::logic_error("unknown claim");
}

struct Outcome {
  std::optional<std::string> discrepancy;
  std::optional<std::string> finding;
};

struct Tagged {
  std::uint64_t index;
  std::string text;
};

struct Partial {
  std::uint64_t discrepancies = 0;
  std::uint64_t findings = 0;
  std::vector<Tagged> witnesses;
  std::vector<Tagged> finding_list;
};

/// Runs check(index) for index in [0, count) over a pool of workers, each
/// on a contiguous block. Aggregation is by count plus the lowest-index
/// witnesses, so the result does not depend on the thread count.
template <typename Check>
void sweep(std::uint64_t count, const SweepOptions& options, std::size_t finding_cap,
           SweepReport& report, Check check) {
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  std::vector<Partial> partials(workers);
  auto work = [&](unsigned w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    Partial& part = partials[w];
    for (std::uint64_t index = begin; index < end; ++index) {
      Outcome out = check(index);
      if (out.discrepancy) {
        ++part.discrepancies;
        if (part.witnesses.size() < options.max_witnesses) {
          part.witnesses.push_back({index, std::move(*out.discrepancy)});
        }
      }
      if (out.finding) {
        ++part.findings;
        if (part.finding_list.size() < finding_cap) part.finding_list.push_back({index, std::move(*out.finding)});
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  std::vector<Tagged> witnesses;
  std::vector<Tagged> findings;
  for (auto& part : partials) {
    report.discrepancies += part.discrepancies;
    report.finding_count += part.findings;
    for (auto& t : part.witnesses) witnesses.push_back(std::move(t));
    for (auto& t : part.finding_list) findings.push_back(std::move(t));
  }
  auto by_index = [](const Tagged& a, const Tagged& b) { return a.index < b.index; };
  std::sort(witnesses.begin(), witnesses.end(), by_index);
  std::sort(findings.begin(), findings.end(), by_index);
  for (std::size_t k = 0; k < witnesses.size() && k < options.max_witnesses; ++k) {
    report.witnesses.push_back(std::move(witnesses[k].text));
  }
  for (std::size_t k = 0; k < findings.size() && k < finding_cap; ++k) {
    report.findings.push_back(std::move(findings[k].text));
  }
  report.cases += count;
}

std::string verdicts(const Monomial& x, std::string_view what, bool theorem, bool oracle) {
  return x.to_string() + ": " + std::string(what) + " criterion " + (theorem ? "true" : "false") +
         ", oracle " + (oracle ? "true" : "false");
}

Outcome check_monomial(Claim claim, const Monomial& x) {
  Outcome out;
  const WoodGraph g = to_graph(x);
  switch (claim) {
    case Claim::Connected: {
      const bool a = is_connected(x);
      const bool b = oracle_is_connected(g);
      if (a != b) out.discrepancy = verdicts(x, "connected", a, b);
      break;
    }
    case Claim::Unilateral: {
      const bool a = is_unilateral(x);
      const bool b = oracle_is_unilateral(g);
      if (a != b) out.discrepancy = verdicts(x, "unilateral", a, b);
      break;
    }
    case Claim::Tree: {
      const bool a = is_tree(x);
      const bool b = oracle_is_tree(g);
      if (a != b) out.discrepancy = verdicts(x, "tree", a, b);
      break;
    }
    case Claim::DirectedPath: {
      const auto a = hamilton_directed_path(x);
      const auto b = oracle_hamilton_directed_path(g);
      if (a.has_value() != b.has_value()) {
        out.discrepancy = verdicts(x, "directed Hamilton path", a.has_value(), b.has_value());
      } else if (a && (*a != *b || !is_hamilton_directed_path(g, *a))) {
        out.discrepancy = x.to_string() + ": witness " + a->to_directed_string() + " is not the ascending path";
      }
      break;
    }
    case Claim::Dirac:
    case Claim::PaperHamilton: {
      const bool condition = claim == Claim::Dirac ? dirac_condition(x) : paper_hamilton_condition(x);
      if (!condition) break;
      const auto cycle = oracle_hamilton_cycle(g);
      if (cycle && !is_hamilton_cycle(g, *cycle)) {
        out.discrepancy = x.to_string() + ": invalid cycle witness " + cycle->to_cycle_string();
      } else if (!cycle) {
        std::string text = x.to_string() + " meets the degree condition but has no Hamilton cycle";
        if (claim == Claim::Dirac) {
          out.discrepancy = std::move(text);
        } else {
          out.finding = x.to_string();
        }
      }
      break;
    }
    case Claim::Degrees: {
      const AdjacencyMatrix a = adjacency_matrix(g, true);
      const int v = g.vertex_count();
      int total = 0;
      for (int p = 0; p < v; ++p) {
        const DegreeProfile d = degrees(x, p);
        std::uint64_t row = 0;
        std::uint64_t col = 0;
        for (int q = 0; q < v; ++q) {
          row += a(p, q);
          col += a(q, p);
        }
        total += d.degree;
        if (static_cast<std::uint64_t>(d.out_degree) != row || static_cast<std::uint64_t>(d.in_degree) != col ||
            d.degree != d.out_degree + d.in_degree) {
          out.discrepancy = x.to_string() + ": degree mismatch at vertex " + vertex_label(p);
          return out;
        }
      }
      if (total != 2 * total_alpha(x)) out.discrepancy = x.to_string() + ": handshake fails";
      break;
    }
    case Claim::Corollary: {
      const bool truth = is_unilateral(x);
      const bool edgewise = unilateral_via_antipode(x, FactorReading::Edgewise);
      if (edgewise != truth) out.discrepancy = verdicts(x, "antipode-factor", edgewise, truth);
      const bool exponentwise = unilateral_via_antipode(x, FactorReading::Exponentwise);
      if (exponentwise != truth) out.finding = verdicts(x, "exponentwise-factor", exponentwise, truth);
      break;
    }
    default:
      throw std::logic_error("not a per-monomial claim");
  }
  return out;
}

std::vector<std::pair<int, int>> generator_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 0; i + j <= n + 1; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

std::string generator_name(int i, int j) {
  return "xi" + std::to_string(i) + "^" + std::to_string(std::uint64_t{1} << j);
}

Outcome check_coproduct_paths(TruncationLevel level, int i, int j) {
  const int n = level.n();
  const Monomial edge = Monomial::generator_power(level, i, j);
  const Monomial one(level);
  std::vector<Tensor> middle_expected;
  for (int k = 1; k <= i - 1; ++k) {
    // The path 2^j -> 2^{j+k} -> 2^{i+j}: the later edge on the left.
    middle_expected.emplace_back(from_graph(WoodGraph(n, std::vector<Edge>{Edge{j + k, i + j}})),
                                 from_graph(WoodGraph(n, std::vector<Edge>{Edge{j, j + k}})));
  }
  std::sort(middle_expected.begin(), middle_expected.end(), TermOrder{});

  std::vector<Tensor> middle;
  bool degenerate_left = false;
  bool degenerate_right = false;
  const TensorPolynomial delta = coproduct_generator(i, j, level);
  for (const auto& t : delta.terms()) {
    if (t.first == edge && t.second == one) {
      degenerate_left = true;
    } else if (t.first == one && t.second == edge) {
      degenerate_right = true;
    } else {
      middle.push_back(t);
    }
  }
  Outcome out;
  if (!degenerate_left || !degenerate_right || middle != middle_expected) {
    out.discrepancy = "D(" + generator_name(i, j) + ") = " + delta.to_string();
  }
  return out;
}

}  // namespace

std::string_view claim_name(Claim claim) { return info(claim).name; }

std::string_view claim_statement(Claim claim) { return info(claim).statement; }

int default_cap(Claim claim) { return info(claim).cap; }

bool is_informational(Claim claim) { return claim == Claim::PaperHamilton; }

std::optional<Claim> claim_from_name(std::string_view name) {
  for (const auto& c : kClaims) {
    if (c.name == name) return c.claim;
  }
  return std::nullopt;
}

std::vector<Claim> all_claims() {
  std::vector<Claim> out;
  for (const auto& c : kClaims) out.push_back(c.claim);
  return out;
}

std::vector<Monomial> sample_monomials(TruncationLevel level, int count, std::uint64_t seed) {
  const std::uint64_t total = monomial_count(level);
  std::vector<Monomial> out;
  if (count >= 0 && total <= static_cast<std::uint64_t>(count)) {
    for (const Monomial& m : enumerate_monomials(level)) out.push_back(m);
    return out;
  }
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(level.n()));
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out.push_back(monomial_at(level, pick(rng)));
  return out;
}

SweepReport run_sweep(Claim claim, int n, const SweepOptions& options) {
  SweepReport report;
  report.claim = claim;
  report.n = n;
  const TruncationLevel level = TruncationLevel::truncated(n);

  switch (claim) {
    case Claim::Connected:
    case Claim::Unilateral:
    case Claim::Tree:
    case Claim::DirectedPath:
    case Claim::Dirac:
    case Claim::PaperHamilton:
    case Claim::Degrees:
    case Claim::Corollary: {
      const std::size_t finding_cap =
          claim == Claim::PaperHamilton ? static_cast<std::size_t>(monomial_count(level)) : options.max_witnesses;
      sweep(monomial_count(level), options, finding_cap, report,
            [&](std::uint64_t index) { return check_monomial(claim, monomial_at(level, index)); });
      if (claim == Claim::Corollary) {
        report.note = "exponentwise-divisibility reading disagrees with unilaterality on " +
                      std::to_string(report.finding_count) + " monomials";
      }
      if (claim == Claim::PaperHamilton) {
        report.note = std::to_string(report.finding_count) +
                      " monomials meet the n/2 degree condition without a Hamilton cycle";
      }
      break;
    }
    case Claim::AntipodePaths: {
      const auto pairs = generator_pairs(n);
      sweep(pairs.size(), options, 0, report, [&](std::uint64_t k) {
        const auto [i, j] = pairs[k];
        Outcome out;
        const Polynomial algebraic = antipode(Monomial::generator_power(level, i, j));
        const Polynomial paths = directed_path_polynomial(j, i, level);
        if (algebraic != paths) {
          out.discrepancy = "c(" + generator_name(i, j) + ") = " + algebraic.to_string() +
                            " but paths give " + paths.to_string();
        }
        return out;
      });
      break;
    }
    case Claim::CoproductPaths: {
      const auto pairs = generator_pairs(n);
      sweep(pairs.size(), options, 0, report, [&](std::uint64_t k) {
        return check_coproduct_paths(level, pairs[k].first, pairs[k].second);
      });
      break;
    }
    case Claim::HopfAxioms: {
      std::vector<Monomial> subjects;
      for (const auto& [i, j] : generator_pairs(n)) subjects.push_back(Monomial::generator_power(level, i, j));
      const auto sample = sample_monomials(level, options.random_monomials, options.seed);
      subjects.insert(subjects.end(), sample.begin(), sample.end());
      sweep(subjects.size(), options, 0, report, [&](std::uint64_t k) {
        Outcome out;
        const Monomial& x = subjects[k];
        for (const CheckResult& r : {check_counit_laws(x), check_coassociativity(x), check_antipode_identity(x)}) {
          if (!r) {
            out.discrepancy = r.detail;
            break;
          }
        }
        return out;
      });
      break;
    }
    case Claim::HopfIdeal: {
      const CheckResult r = verify_hopf_ideal(n);
      report.cases = 1;
      if (!r) {
        report.discrepancies = 1;
        report.witnesses.push_back(r.detail);
      }
      break;
    }
    case Claim::AntipodeRecursion: {
      const CheckResult r = verify_antipode_recursion(options.antipode_recursion_depth);
      report.cases = static_cast<std::uint64_t>(options.antipode_recursion_depth);
      if (!r) {
        report.discrepancies = 1;
        report.witnesses.push_back(r.detail);
      }
      break;
    }
  }
  return report;
}

std::vector<std::string> paper_hamilton_counterexamples(int n) {
  return run_sweep(Claim::PaperHamilton, n).findings;
}

}  // namespace steengraph
