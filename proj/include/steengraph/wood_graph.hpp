#ifndef STEENGRAPH_WOOD_GRAPH_HPP_
#define STEENGRAPH_WOOD_GRAPH_HPP_

// Wood's bijection between monomials of A*(n) and simple graphs on the
// vertex set {2^0, ..., 2^{n+1}}. Vertices are stored as their indices p;
// the factor xi_i^{2^j} is the edge {j, i+j}. Viewed as a digraph, every
// edge points toward the larger vertex.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "steengraph/algebra.hpp"

namespace steengraph {

/// An unordered edge {low, high} with low < high.
struct Edge {
  int low = 0;
  int high = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class WoodGraph {
 public:
  /// The edgeless graph on n+2 vertices.
  explicit WoodGraph(int n);

  /// Edges may be given in either orientation; duplicates collapse.
  /// Throws std::out_of_range for loops or vertices outside [0, n+1].
  WoodGraph(int n, std::initializer_list<Edge> edges);
  WoodGraph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int vertex_count() const { return n_ + 2; }

  /// Sorted lexicographically by (low, high).
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(int p, int q) const;

  /// Bit q is set iff {p, q} is an edge.
  std::uint32_t neighbours(int p) const { return adjacency_.at(static_cast<std::size_t>(p)); }

  /// Same graph with one more edge.
  WoodGraph with_edge(int p, int q) const;

  friend bool operator==(const WoodGraph& a, const WoodGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void insert(int p, int q);

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adjacency_;
};

/// A square matrix of nonnegative walk counts indexed by vertex.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size * size), 0) {}

  int size() const { return size_; }
  std::uint64_t operator()(int p, int q) const { return entries_[index(p, q)]; }
  std::uint64_t& operator()(int p, int q) { return entries_[index(p, q)]; }

  AdjacencyMatrix transpose() const;
  bool is_symmetric() const;
  bool is_strictly_upper_triangular() const;

  /// Throws std::overflow_error if an entry leaves 64-bit range.
  friend AdjacencyMatrix operator*(const AdjacencyMatrix& a, const AdjacencyMatrix& b);
  friend AdjacencyMatrix operator+(const AdjacencyMatrix& a, const AdjacencyMatrix& b);
  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::size_t index(int p, int q) const { return static_cast<std::size_t>(p * size_ + q); }

  int size_;
  std::vector<std::uint64_t> entries_;
};

/// Edge set {{j, i+j} : xi_i^{2^j} is a dyadic factor of x}. x must be truncated.
WoodGraph to_graph(const Monomial& x);

/// Inverse of to_graph: each edge {p, q} contributes 2^p to r_{q-p}.
Monomial from_graph(const WoodGraph& g);

/// Undirected: symmetric 0/1 matrix. Directed: the same bits above the diagonal only.
AdjacencyMatrix adjacency_matrix(const Monomial& x, bool directed);
AdjacencyMatrix adjacency_matrix(const WoodGraph& g, bool directed);

/// xi_1^{2^{n+1}-1} xi_2^{2^n-1} ... xi_{n+1}; its graph is complete.
Monomial top_class(TruncationLevel level);

/// Decimal label 2^p of vertex p.
std::string vertex_label(int p);

/// Graphviz text. Nodes are named by their labels 2^p and edges are listed in
/// (p, q) order, one per line. A two-row layout hint is written as a comment.
std::string export_dot(const WoodGraph& g, bool directed);

}  // namespace steengraph

#endif  // STEENGRAPH_WOOD_GRAPH_HPP_
