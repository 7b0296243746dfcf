#ifndef STEENGRAPH_STRUCTURE_HPP_
#define STEENGRAPH_STRUCTURE_HPP_

// Trees, vertex degrees and Hamilton cycles/paths of Wood graphs, each with a
// monomial-side criterion and a brute-force graph-side oracle.

#include <optional>
#include <string>
#include <vector>

#include "steengraph/algebra.hpp"
#include "steengraph/wood_graph.hpp"

namespace steengraph {

struct DegreeProfile {
  int vertex = 0;
  int out_degree = 0;  // edges to larger vertices
  int in_degree = 0;   // edges from smaller vertices
  int degree = 0;
};

/// Ordered list of vertex indices (a walk, path or cycle witness).
struct VertexSequence {
  std::vector<int> vertices;

  /// "1->2->4" style.
  std::string to_directed_string() const;
  /// "2-4-16-1-8-2" style; the start vertex is repeated at the end.
  std::string to_cycle_string() const;

  friend bool operator==(const VertexSequence&, const VertexSequence&) = default;
};

/// Degrees read off the dyadic bits. Throws std::out_of_range for a bad vertex.
DegreeProfile degrees(const Monomial& x, int p);

/// Connected with exactly n+1 edges (sum of alpha(r_i) equals n+1).
bool is_tree(const Monomial& x);

/// BFS connectivity plus DFS cycle detection; no edge counting.
bool oracle_is_tree(const WoodGraph& g);

/// DFS cycle detection on the undirected graph.
bool oracle_is_acyclic(const WoodGraph& g);

/// n > 0 and 2*deg(v) >= n for every vertex. The threshold is half of n, not half
/// of the vertex count n+2, and the condition is not sufficient: xi_1^7 in A*(2)
/// (a path) meets it. Kept so sweeps can report its counterexamples.
bool paper_hamilton_condition(const Monomial& x);

/// Dirac's condition on the n+2 vertices: n > 0 and 2*deg(v) >= n+2 everywhere.
bool dirac_condition(const Monomial& x);

/// Backtracking search with vertex 0 first and the second vertex smaller than the
/// last. Returns the lexicographically smallest Hamilton cycle (without the
/// repeated start) or nullopt. Graphs on fewer than 3 vertices have none.
std::optional<VertexSequence> oracle_hamilton_cycle(const WoodGraph& g);

/// True iff `cycle` lists every vertex once and consecutive vertices (and last,
/// first) are adjacent. A repeated start vertex at the end is accepted.
bool is_hamilton_cycle(const WoodGraph& g, const VertexSequence& cycle);

/// True iff `path` visits every vertex once along upward edges.
bool is_hamilton_directed_path(const WoodGraph& g, const VertexSequence& path);

/// x^dir has a Hamilton directed path iff r_1 = 2^{n+1} - 1; the path is then 0->1->...->n+1.
bool has_hamilton_directed_path(const Monomial& x);
std::optional<VertexSequence> hamilton_directed_path(const Monomial& x);

/// Direct check that every consecutive edge {p, p+1} is present.
std::optional<VertexSequence> oracle_hamilton_directed_path(const WoodGraph& g);

}  // namespace steengraph

#endif  // STEENGRAPH_STRUCTURE_HPP_
