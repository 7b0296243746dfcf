#include <doctest.h>

#include "../oracles.hpp"
#include "steengraph/connectivity.hpp"
#include "steengraph/structure.hpp"

using namespace steengraph;

namespace {

TruncationLevel L(int n) { return TruncationLevel::truncated(n); }

Monomial M(const char* text, int n) { return parse_monomial(text, L(n)); }

std::vector<Edge> E(std::initializer_list<Edge> edges) { return edges; }

std::vector<int> chain(int n) {
  std::vector<int> v;
  for (int p = 0; p <= n + 1; ++p) v.push_back(p);
  return v;
}

}  // namespace

TEST_CASE("degrees") {
  const Monomial x = M("xi1^6 xi2^6 xi3 xi4", 3);
  const std::vector<std::pair<int, int>> in_out{{0, 2}, {0, 2}, {1, 2}, {3, 0}, {2, 0}};
  for (int p = 0; p < 5; ++p) {
    const DegreeProfile d = degrees(x, p);
    CHECK(d.vertex == p);
    CHECK(d.in_degree == in_out[p].first);
    CHECK(d.out_degree == in_out[p].second);
    CHECK(d.degree == d.in_degree + d.out_degree);
  }
  for (const Monomial& y : enumerate_monomials(L(2))) CHECK(degrees(y, 0).in_degree == 0);
  CHECK_THROWS_AS(degrees(x, 5), std::out_of_range);
  CHECK_THROWS_AS(degrees(x, -1), std::out_of_range);
}

TEST_CASE("is_tree") {
  CHECK(is_tree(M("xi1 xi2 xi3", 2)));
  CHECK_FALSE(is_tree(M("xi1^6 xi2 xi3", 2)));
  CHECK_FALSE(is_tree(M("1", 0)));
  CHECK(is_tree(M("xi1", 0)));
}

TEST_CASE("tree and acyclicity oracles") {
  CHECK(oracle_is_tree(WoodGraph(2, E({{0, 1}, {0, 2}, {0, 3}}))));
  CHECK_FALSE(oracle_is_tree(WoodGraph(1, E({{0, 1}, {1, 2}, {0, 2}}))));
  CHECK_FALSE(oracle_is_acyclic(WoodGraph(1, E({{0, 1}, {1, 2}, {0, 2}}))));
  CHECK(oracle_is_tree(to_graph(M("xi1 xi2 xi3", 2))));
  CHECK(oracle_is_acyclic(WoodGraph(3)));
}

TEST_CASE("degree conditions") {
  CHECK(paper_hamilton_condition(M("xi1^6 xi2^6 xi3 xi4", 3)));
  CHECK_FALSE(paper_hamilton_condition(M("xi1^15 xi3^2", 3)));
  CHECK_FALSE(paper_hamilton_condition(M("1", 1)));
  CHECK(paper_hamilton_condition(M("xi1^7", 2)));

  CHECK(dirac_condition(top_class(L(2))));
  CHECK_FALSE(dirac_condition(M("xi1^7", 2)));
  for (int n = 0; n <= 3; ++n) CHECK_FALSE(dirac_condition(Monomial(L(n))));
  CHECK_FALSE(dirac_condition(top_class(L(0))));
}

TEST_CASE("Hamilton cycle oracle") {
  const WoodGraph g = to_graph(M("xi1^6 xi2^6 xi3 xi4", 3));
  const auto cycle = oracle_hamilton_cycle(g);
  REQUIRE(cycle.has_value());
  CHECK(is_hamilton_cycle(g, *cycle));
  CHECK(is_hamilton_cycle(g, VertexSequence{{1, 2, 4, 0, 3}}));
  CHECK(is_hamilton_cycle(g, VertexSequence{{1, 2, 4, 0, 3, 1}}));
  CHECK_FALSE(is_hamilton_cycle(g, VertexSequence{{1, 2, 4, 0}}));
  CHECK_FALSE(is_hamilton_cycle(g, VertexSequence{{1, 2, 4, 3, 0}}));
  CHECK(VertexSequence{{1, 2, 4, 0, 3}}.to_cycle_string() == "2-4-16-1-8-2");

  CHECK_FALSE(oracle_hamilton_cycle(to_graph(M("xi1^15 xi3^2", 3))).has_value());
  CHECK_FALSE(oracle_hamilton_cycle(to_graph(M("xi1^7", 2))).has_value());
  CHECK_FALSE(oracle_hamilton_cycle(to_graph(top_class(L(0)))).has_value());
  const auto triangle = oracle_hamilton_cycle(to_graph(top_class(L(1))));
  REQUIRE(triangle.has_value());
  CHECK(triangle->vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("Hamilton directed path") {
  const Monomial x = M("xi1^15 xi3^2", 3);
  CHECK(has_hamilton_directed_path(x));
  REQUIRE(hamilton_directed_path(x).has_value());
  CHECK(hamilton_directed_path(x)->vertices == chain(3));
  CHECK(hamilton_directed_path(x)->to_directed_string() == "1->2->4->8->16");
  CHECK(oracle_hamilton_directed_path(to_graph(x))->vertices == chain(3));

  CHECK_FALSE(has_hamilton_directed_path(M("xi1^6 xi2 xi3", 2)));
  CHECK_FALSE(hamilton_directed_path(M("xi1^6 xi2 xi3", 2)).has_value());
  CHECK_FALSE(oracle_hamilton_directed_path(to_graph(M("xi1^6 xi2 xi3", 2))).has_value());

  for (int n = 0; n <= 4; ++n) {
    CHECK(has_hamilton_directed_path(top_class(L(n))));
    CHECK(oracle_hamilton_directed_path(to_graph(top_class(L(n))))->vertices == chain(n));
    CHECK_FALSE(oracle_hamilton_directed_path(WoodGraph(n)).has_value());
  }
  CHECK(is_hamilton_directed_path(to_graph(x), VertexSequence{chain(3)}));
  CHECK_FALSE(is_hamilton_directed_path(to_graph(x), VertexSequence{{0, 1, 2, 3}}));
}

TEST_CASE("property: degree counts and handshake") {
  for (int n = 0; n <= 3; ++n) {
    for (const Monomial& x : enumerate_monomials(L(n))) {
      const AdjacencyMatrix d = adjacency_matrix(x, true);
      int total = 0;
      for (int p = 0; p <= n + 1; ++p) {
        std::uint64_t row = 0;
        std::uint64_t column = 0;
        for (int q = 0; q <= n + 1; ++q) {
          row += d(p, q);
          column += d(q, p);
        }
        const DegreeProfile profile = degrees(x, p);
        REQUIRE(static_cast<std::uint64_t>(profile.out_degree) == row);
        REQUIRE(static_cast<std::uint64_t>(profile.in_degree) == column);
        total += profile.degree;
      }
      REQUIRE(total == 2 * total_alpha(x));
    }
  }
}

TEST_CASE("property: tree criterion") {
  for (int n = 0; n <= 4; ++n) {
    for (const Monomial& x : enumerate_monomials(L(n))) {
      const WoodGraph g = to_graph(x);
      REQUIRE(is_tree(x) == oracle_is_tree(g));
      REQUIRE(oracle_is_tree(g) == (oracle::component_count(g) == 1 && oracle_is_acyclic(g)));
    }
  }
}

TEST_CASE("property: connected graphs are acyclic exactly with n+1 edges") {
  for (int n = 0; n <= 3; ++n) {
    for (const Monomial& x : enumerate_monomials(L(n))) {
      const WoodGraph g = to_graph(x);
      if (!oracle_is_connected(g)) continue;
      REQUIRE(oracle_is_acyclic(g) == (static_cast<int>(g.edge_count()) == n + 1));
    }
  }
}

TEST_CASE("property: Dirac threshold yields a cycle") {
  for (int n = 0; n <= 3; ++n) {
    for (const Monomial& x : enumerate_monomials(L(n))) {
      const WoodGraph g = to_graph(x);
      const auto cycle = oracle_hamilton_cycle(g);
      REQUIRE(cycle.has_value() == oracle::has_hamilton_cycle_by_permutation(g));
      if (cycle) REQUIRE(is_hamilton_cycle(g, *cycle));
      if (dirac_condition(x)) REQUIRE(cycle.has_value());
    }
  }
}

TEST_CASE("property: spanning directed path iff r_1 is full") {
  for (int n = 0; n <= 4; ++n) {
    for (const Monomial& x : enumerate_monomials(L(n))) {
      const WoodGraph g = to_graph(x);
      const bool spanning = oracle::longest_directed_path_vertices(g) == n + 2;
      REQUIRE(has_hamilton_directed_path(x) == spanning);
      REQUIRE(oracle_hamilton_directed_path(g).has_value() == spanning);
      if (spanning) REQUIRE(hamilton_directed_path(x)->vertices == chain(n));
    }
  }
}
