#ifndef STEENGRAPH_VERIFY_HPP_
#define STEENGRAPH_VERIFY_HPP_

// Exhaustive sweeps that compare each monomial-side criterion with its
// graph-side oracle over every monomial of A*(n).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steengraph/algebra.hpp"

namespace steengraph {

enum class Claim {
  Connected,        // walk counts C(p,q) vs BFS
  Unilateral,       // walk counts U(p,q) vs transitive closure
  Tree,             // connected + edge count vs BFS + DFS acyclicity
  DirectedPath,     // r_1 = 2^{n+1}-1 vs consecutive-edge search
  Dirac,            // degree >= (n+2)/2 implies a Hamilton cycle
  PaperHamilton,    // degree >= n/2 implies a Hamilton cycle (reports counterexamples)
  Degrees,          // dyadic degree counts vs adjacency row/column sums
  Corollary,        // antipode summand factors vs walk counts U(p,q)
  AntipodePaths,    // c(xi_i^{2^j}) vs directed path enumeration
  CoproductPaths,   // middle terms of Δ(xi_i^{2^j}) vs length-2 paths
  HopfAxioms,       // counit, coassociativity, antipode identity
  HopfIdeal,        // Δ, c, ε of the generators of I(n) vanish in A*(n)
  AntipodeRecursion // sum_k xi_{i-k}^{2^k} c(xi_k) = 0, i <= 8
};

/// CLI selector names, e.g. "main", "paper-hamilton", "antipode-paths".
std::string_view claim_name(Claim claim);
std::optional<Claim> claim_from_name(std::string_view name);
std::vector<Claim> all_claims();

/// One-line statement of what a sweep checks.
std::string_view claim_statement(Claim claim);

/// Largest n a sweep runs at without an explicit override.
int default_cap(Claim claim);

/// Informational sweeps record findings but never fail.
bool is_informational(Claim claim);

struct SweepOptions {
  unsigned threads = 1;
  std::size_t max_witnesses = 10;
  int antipode_recursion_depth = 8;
  /// Pseudo-random monomials checked by the Hopf-axiom sweep, beyond generator powers.
  int random_monomials = 50;
  std::uint64_t seed = 0x5eed2024;
};

struct SweepReport {
  Claim claim = Claim::Connected;
  int n = 0;
  std::uint64_t cases = 0;
  std::uint64_t discrepancies = 0;
  /// First few discrepancies, in enumeration order.
  std::vector<std::string> witnesses;
  /// Informational results: the counterexample list for PaperHamilton, the
  /// alternative-reading comparison for Corollary.
  std::vector<std::string> findings;
  std::uint64_t finding_count = 0;
  std::string note;

  bool passed() const { return discrepancies == 0; }
};

SweepReport run_sweep(Claim claim, int n, const SweepOptions& options = {});

/// Canonical strings of the monomials of A*(n) meeting the n/2 degree condition
/// without a Hamilton cycle, in enumeration order.
std::vector<std::string> paper_hamilton_counterexamples(int n);

/// The monomials used by the Hopf-axiom sweep: all of them when there are at
/// most count, otherwise count seeded pseudo-random draws.
std::vector<Monomial> sample_monomials(TruncationLevel level, int count, std::uint64_t seed);

}  // namespace steengraph

#endif  // STEENGRAPH_VERIFY_HPP_
