#ifndef STEENGRAPH_CONNECTIVITY_HPP_
#define STEENGRAPH_CONNECTIVITY_HPP_

// Walk-count criteria for connectedness of a Wood graph and unilaterality of
// its directed form, plus reachability oracles that do not go through matrices.
//
// For a monomial x in A*(n) with adjacency matrix A (n+2 vertices),
//   C(p, q) = [A + A^2 + ... + A^{n+1}]_{p,q}        (undirected A)
//   U(p, q) = same sum with the strictly upper triangular A.
// x is connected iff every C(p, q), p < q, is positive, and x^dir is
// unilateral iff every U(p, q) is positive. x^dir is never strongly connected:
// no edge points into vertex 0.

#include <cstdint>
#include <vector>

#include "steengraph/algebra.hpp"
#include "steengraph/wood_graph.hpp"

namespace steengraph {

/// Values indexed by vertex pairs p < q.
class WalkCountTable {
 public:
  struct Entry {
    int p;
    int q;
    std::uint64_t value;
  };

  explicit WalkCountTable(int n);

  int n() const { return n_; }
  std::uint64_t at(int p, int q) const;
  void set(int p, int q, std::uint64_t value);

  /// All (n+2)(n+1)/2 entries in lexicographic (p, q) order.
  std::vector<Entry> entries() const;

  bool all_positive() const;

  friend bool operator==(const WalkCountTable&, const WalkCountTable&) = default;

 private:
  std::size_t slot(int p, int q) const;

  int n_;
  std::vector<std::uint64_t> values_;
};

/// A + A^2 + ... + A^{max_power}.
AdjacencyMatrix power_sum(const AdjacencyMatrix& a, int max_power);

WalkCountTable connection_numbers(const Monomial& x);
WalkCountTable unilateral_numbers(const Monomial& x);

bool is_connected(const Monomial& x);
bool is_unilateral(const Monomial& x);

/// Breadth-first search over the undirected graph.
bool oracle_is_connected(const WoodGraph& g);

/// Transitive closure of the upward orientation; every pair must be comparable.
bool oracle_is_unilateral(const WoodGraph& g);

}  // namespace steengraph

#endif  // STEENGRAPH_CONNECTIVITY_HPP_
