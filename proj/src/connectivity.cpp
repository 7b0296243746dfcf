#include "steengraph/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace steengraph {

WalkCountTable::WalkCountTable(int n) : n_(n) {
  const auto v = static_cast<std::size_t>(n + 2);
  values_.assign(v * (v - 1) / 2, 0);
}

std::size_t WalkCountTable::slot(int p, int q) const {
  if (p < 0 || q > n_ + 1 || p >= q) {
    throw std::out_of_range("pair (" + std::to_string(p) + ", " + std::to_string(q) +
                            ") is not p < q within [0, " + std::to_string(n_ + 1) + "]");
  }
  // Row p starts after rows 0..p-1, which hold (n+1) + n + ... entries.
  const int v = n_ + 2;
  const int before = p * (2 * v - p - 1) / 2;
  return static_cast<std::size_t>(before + (q - p - 1));
}

std::uint64_t WalkCountTable::at(int p, int q) const { return values_[slot(p, q)]; }

void WalkCountTable::set(int p, int q, std::uint64_t value) { values_[slot(p, q)] = value; }

std::vector<WalkCountTable::Entry> WalkCountTable::entries() const {
  std::vector<Entry> out;
  out.reserve(values_.size());
  for (int p = 0; p <= n_ + 1; ++p) {
    for (int q = p + 1; q <= n_ + 1; ++q) out.push_back({p, q, at(p, q)});
  }
  return out;
}

bool WalkCountTable::all_positive() const {
  return std::all_of(values_.begin(), values_.end(), [](std::uint64_t v) { return v > 0; });
}

AdjacencyMatrix power_sum(const AdjacencyMatrix& a, int max_power) {
  AdjacencyMatrix sum(a.size());
  AdjacencyMatrix power = a;
  for (int t = 1; t <= max_power; ++t) {
    sum = sum + power;
    if (t < max_power) power = power * a;
  }
  return sum;
}

namespace {

WalkCountTable table_from(const Monomial& x, bool directed) {
  const int n = x.level().n();
  // A path on n+2 vertices has length at most n+1.
  const AdjacencyMatrix sum = power_sum(adjacency_matrix(x, directed), n + 1);
  WalkCountTable table(n);
  for (int p = 0; p <= n + 1; ++p) {
    for (int q = p + 1; q <= n + 1; ++q) table.set(p, q, sum(p, q));
  }
  return table;
}

}  // namespace

WalkCountTable connection_numbers(const Monomial& x) { return table_from(x, false); }

WalkCountTable unilateral_numbers(const Monomial& x) { return table_from(x, true); }

bool is_connected(const Monomial& x) { return connection_numbers(x).all_positive(); }

bool is_unilateral(const Monomial& x) { return unilateral_numbers(x).all_positive(); }

bool oracle_is_connected(const WoodGraph& g) {
  const int v = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(v), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop_front();
    for (int q = 0; q < v; ++q) {
      if (!seen[static_cast<std::size_t>(q)] && g.has_edge(p, q)) {
        seen[static_cast<std::size_t>(q)] = true;
        ++reached;
        queue.push_back(q);
      }
    }
  }
  return reached == v;
}

bool oracle_is_unilateral(const WoodGraph& g) {
  const int v = g.vertex_count();
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(v),
                                       std::vector<bool>(static_cast<std::size_t>(v), false));
  for (const Edge& e : g.edges()) reach[static_cast<std::size_t>(e.low)][static_cast<std::size_t>(e.high)] = true;
  for (int k = 0; k < v; ++k) {
    for (int p = 0; p < v; ++p) {
      if (!reach[p][k]) continue;
      for (int q = 0; q < v; ++q) {
        if (reach[k][q]) reach[p][q] = true;
      }
    }
  }
  for (int p = 0; p < v; ++p) {
    for (int q = p + 1; q < v; ++q) {
      if (!reach[p][q] && !reach[q][p]) return false;
    }
  }
  return true;
}

}  // namespace steengraph
