#include "steengraph/structure.hpp"

#include <stdexcept>

#include "steengraph/connectivity.hpp"

namespace steengraph {

std::string VertexSequence::to_directed_string() const {
  std::string out;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k) out += "->";
    out += vertex_label(vertices[k]);
  }
  return out;
}

std::string VertexSequence::to_cycle_string() const {
  std::string out;
  for (int v : vertices) out += vertex_label(v) + '-';
  if (!vertices.empty()) out += vertex_label(vertices.front());
  return out;
}

DegreeProfile degrees(const Monomial& x, int p) {
  const int last = x.level().n() + 1;
  if (p < 0 || p > last) {
    throw std::out_of_range("vertex " + std::to_string(p) + " outside [0, " + std::to_string(last) + "]");
  }
  DegreeProfile d{p, 0, 0, 0};
  for (int k = 1; k <= last - p; ++k) d.out_degree += edge_bit(x, p, p + k);
  for (int k = 1; k <= p; ++k) d.in_degree += edge_bit(x, p - k, p);
  d.degree = d.out_degree + d.in_degree;
  return d;
}

bool is_tree(const Monomial& x) {
  return total_alpha(x) == x.level().n() + 1 && is_connected(x);
}

namespace {

bool has_cycle_from(const WoodGraph& g, int v, int parent, std::vector<bool>& seen) {
  seen[static_cast<std::size_t>(v)] = true;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (!g.has_edge(v, w) || w == parent) continue;
    if (seen[static_cast<std::size_t>(w)]) return true;
    if (has_cycle_from(g, w, v, seen)) return true;
  }
  return false;
}

}  // namespace

bool oracle_is_acyclic(const WoodGraph& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!seen[static_cast<std::size_t>(v)] && has_cycle_from(g, v, -1, seen)) return false;
  }
  return true;
}

bool oracle_is_tree(const WoodGraph& g) { return oracle_is_connected(g) && oracle_is_acyclic(g); }

namespace {

bool all_degrees_at_least(const Monomial& x, int twice_threshold) {
  const int n = x.level().n();
  if (n <= 0) return false;
  for (int p = 0; p <= n + 1; ++p) {
    if (2 * degrees(x, p).degree < twice_threshold) return false;
  }
  return true;
}

bool extend_cycle(const WoodGraph& g, std::vector<int>& path, std::uint32_t used) {
  const int v = g.vertex_count();
  if (static_cast<int>(path.size()) == v) {
    return path[1] < path.back() && g.has_edge(path.back(), path.front());
  }
  for (int w = 1; w < v; ++w) {
    if ((used >> w) & 1U) continue;
    if (!g.has_edge(path.back(), w)) continue;
    path.push_back(w);
    if (extend_cycle(g, path, used | (1U << w))) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

bool paper_hamilton_condition(const Monomial& x) { return all_degrees_at_least(x, x.level().n()); }

bool dirac_condition(const Monomial& x) { return all_degrees_at_least(x, x.level().n() + 2); }

std::optional<VertexSequence> oracle_hamilton_cycle(const WoodGraph& g) {
  if (g.vertex_count() < 3) return std::nullopt;
  std::vector<int> path{0};
  if (extend_cycle(g, path, 1U)) return VertexSequence{path};
  return std::nullopt;
}

bool is_hamilton_cycle(const WoodGraph& g, const VertexSequence& cycle) {
  std::vector<int> vs = cycle.vertices;
  if (vs.size() > 1 && vs.front() == vs.back()) vs.pop_back();
  const int v = g.vertex_count();
  if (v < 3 || static_cast<int>(vs.size()) != v) return false;
  std::uint32_t seen = 0;
  for (int p : vs) {
    if (p < 0 || p >= v || ((seen >> p) & 1U)) return false;
    seen |= 1U << p;
  }
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (!g.has_edge(vs[k], vs[(k + 1) % vs.size()])) return false;
  }
  return true;
}

bool is_hamilton_directed_path(const WoodGraph& g, const VertexSequence& path) {
  const auto& vs = path.vertices;
  if (static_cast<int>(vs.size()) != g.vertex_count()) return false;
  std::uint32_t seen = 0;
  for (int p : vs) {
    if (p < 0 || p >= g.vertex_count() || ((seen >> p) & 1U)) return false;
    seen |= 1U << p;
  }
  for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
    if (vs[k] >= vs[k + 1] || !g.has_edge(vs[k], vs[k + 1])) return false;
  }
  return true;
}

bool has_hamilton_directed_path(const Monomial& x) {
  const int n = x.level().n();
  return x.exponent(1) == (Exponent{1} << (n + 1)) - 1;
}

namespace {

VertexSequence ascending_path(int vertex_count) {
  VertexSequence s;
  for (int p = 0; p < vertex_count; ++p) s.vertices.push_back(p);
  return s;
}

}  // namespace

std::optional<VertexSequence> hamilton_directed_path(const Monomial& x) {
  if (!has_hamilton_directed_path(x)) return std::nullopt;
  return ascending_path(x.level().vertex_count());
}

std::optional<VertexSequence> oracle_hamilton_directed_path(const WoodGraph& g) {
  for (int p = 0; p + 1 < g.vertex_count(); ++p) {
    if (!g.has_edge(p, p + 1)) return std::nullopt;
  }
  return ascending_path(g.vertex_count());
}

}  // namespace steengraph
