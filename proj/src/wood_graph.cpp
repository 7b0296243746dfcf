#include "steengraph/wood_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace steengraph {

WoodGraph::WoodGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxTruncation) {
    throw std::out_of_range("graph parameter n=" + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxTruncation) + "]");
  }
  adjacency_.assign(static_cast<std::size_t>(n + 2), 0);
}

WoodGraph::WoodGraph(int n, std::initializer_list<Edge> edges) : WoodGraph(n) {
  for (const Edge& e : edges) insert(e.low, e.high);
}

WoodGraph::WoodGraph(int n, const std::vector<Edge>& edges) : WoodGraph(n) {
  for (const Edge& e : edges) insert(e.low, e.high);
}

void WoodGraph::insert(int p, int q) {
  if (p > q) std::swap(p, q);
  if (p < 0 || q > n_ + 1 || p == q) {
    throw std::out_of_range("edge {" + std::to_string(p) + ", " + std::to_string(q) +
                            "} invalid on " + std::to_string(n_ + 2) + " vertices");
  }
  if (has_edge(p, q)) return;
  const Edge e{p, q};
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  adjacency_[static_cast<std::size_t>(p)] |= 1U << q;
  adjacency_[static_cast<std::size_t>(q)] |= 1U << p;
}

bool WoodGraph::has_edge(int p, int q) const {
  if (p < 0 || q < 0 || p > n_ + 1 || q > n_ + 1) return false;
  return (adjacency_[static_cast<std::size_t>(p)] >> q) & 1U;
}

WoodGraph WoodGraph::with_edge(int p, int q) const {
  WoodGraph g = *this;
  g.insert(p, q);
  return g;
}

AdjacencyMatrix AdjacencyMatrix::transpose() const {
  AdjacencyMatrix t(size_);
  for (int p = 0; p < size_; ++p) {
    for (int q = 0; q < size_; ++q) t(q, p) = (*this)(p, q);
  }
  return t;
}

bool AdjacencyMatrix::is_symmetric() const { return *this == transpose(); }

bool AdjacencyMatrix::is_strictly_upper_triangular() const {
  for (int p = 0; p < size_; ++p) {
    for (int q = 0; q <= p; ++q) {
      if ((*this)(p, q) != 0) return false;
    }
  }
  return true;
}

AdjacencyMatrix operator*(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("matrix size mismatch");
  AdjacencyMatrix c(a.size_);
  for (int p = 0; p < a.size_; ++p) {
    for (int k = 0; k < a.size_; ++k) {
      const std::uint64_t left = a(p, k);
      if (left == 0) continue;
      for (int q = 0; q < a.size_; ++q) {
        std::uint64_t term = 0;
        if (__builtin_mul_overflow(left, b(k, q), &term) ||
            __builtin_add_overflow(c(p, q), term, &c(p, q))) {
          throw std::overflow_error("walk count overflow");
        }
      }
    }
  }
  return c;
}

AdjacencyMatrix operator+(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("matrix size mismatch");
  AdjacencyMatrix c(a.size_);
  for (std::size_t k = 0; k < c.entries_.size(); ++k) {
    if (__builtin_add_overflow(a.entries_[k], b.entries_[k], &c.entries_[k])) {
      throw std::overflow_error("walk count overflow");
    }
  }
  return c;
}

WoodGraph to_graph(const Monomial& x) {
  const int n = x.level().n();
  std::vector<Edge> edges;
  for (const DyadicBit& bit : x.dyadic_bits()) edges.push_back({bit.tail(), bit.head()});
  return WoodGraph(n, edges);
}

Monomial from_graph(const WoodGraph& g) {
  std::vector<Exponent> ex(static_cast<std::size_t>(g.n() + 1), 0);
  for (const Edge& e : g.edges()) ex[static_cast<std::size_t>(e.high - e.low - 1)] |= Exponent{1} << e.low;
  return Monomial(TruncationLevel::truncated(g.n()), ex);
}

AdjacencyMatrix adjacency_matrix(const WoodGraph& g, bool directed) {
  AdjacencyMatrix a(g.vertex_count());
  for (const Edge& e : g.edges()) {
    a(e.low, e.high) = 1;
    if (!directed) a(e.high, e.low) = 1;
  }
  return a;
}

AdjacencyMatrix adjacency_matrix(const Monomial& x, bool directed) {
  const int size = x.level().vertex_count();
  AdjacencyMatrix a(size);
  for (int p = 0; p < size; ++p) {
    for (int q = p + 1; q < size; ++q) {
      const auto bit = static_cast<std::uint64_t>(edge_bit(x, p, q));
      a(p, q) = bit;
      if (!directed) a(q, p) = bit;
    }
  }
  return a;
}

Monomial top_class(TruncationLevel level) {
  if (!level.is_truncated()) throw std::invalid_argument("top class needs a truncated level");
  std::vector<Exponent> ex;
  for (int i = 1; i <= level.max_generator(); ++i) ex.push_back(level.exponent_bound(i));
  return Monomial(level, ex);
}

std::string vertex_label(int p) { return std::to_string(std::uint64_t{1} << p); }

std::string export_dot(const WoodGraph& g, bool directed) {
  const int v = g.vertex_count();
  // Two rows as in the usual drawings: 2^0 at the top right, the lower half of
  // the remaining vertices underneath in decreasing order.
  const int bottom = v / 2;
  std::string top_row;
  for (int p = v - 1; p > bottom; --p) top_row += vertex_label(p) + ' ';
  top_row += vertex_label(0);
  std::string bottom_row;
  for (int p = bottom; p >= 1; --p) {
    bottom_row += vertex_label(p);
    if (p > 1) bottom_row += ' ';
  }

  std::string out = directed ? "digraph {\n" : "graph {\n";
  out += "  // layout: top row " + top_row + "; bottom row " + bottom_row + "\n";
  for (int p = 0; p < v; ++p) out += "  \"" + vertex_label(p) + "\";\n";
  const std::string arrow = directed ? " -> " : " -- ";
  for (const Edge& e : g.edges()) {
    out += "  \"" + vertex_label(e.low) + '"' + arrow + '"' + vertex_label(e.high) + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace steengraph
