#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pathsys/graph.hpp"
#include "pathsys/path_system.hpp"

using namespace pathsys;

TEST_SUITE("graph") {

TEST_CASE("Paley graph on 5 vertices is the 5-cycle") {
  const Graph g = paley_graph(PrimeField(5));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("Paley graphs are regular and match the residue oracle") {
  for (std::uint64_t p : {13u, 29u, 53u, 101u}) {
    const Graph g = paley_graph(PrimeField(p));
    const auto sq = oracle::squares_mod(static_cast<std::int64_t>(p));
    CHECK(g.order() == p);
    CHECK(g.size() == p * (p - 1) / 4);
    for (Vertex a = 0; a < static_cast<Vertex>(p); ++a) {
      CHECK(g.degree(a) == (p - 1) / 2);
      for (Vertex b = 0; b < static_cast<Vertex>(p); ++b) {
        if (a == b) continue;
        const auto d = ((a - b) % static_cast<Vertex>(p) + static_cast<Vertex>(p)) % static_cast<Vertex>(p);
        CHECK(g.adjacent(a, b) == (sq.count(d) > 0));
        CHECK(g.adjacent(a, b) == g.adjacent(b, a));
      }
    }
  }
  const Graph g29 = paley_graph(PrimeField(29));
  CHECK(g29.adjacent(0, 1));
  CHECK_FALSE(g29.adjacent(0, 2));
  CHECK_THROWS_WITH_AS(paley_graph(PrimeField(7)), doctest::Contains("asymmetric residue relation"), InputError);
}

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(Graph({1, 2, 2}, {}), InputError);
  CHECK_THROWS_AS(Graph({1, 2}, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph({1, 2}, {{1, 2}, {2, 1}}), InputError);
  CHECK_THROWS_AS(Graph({1, 2}, {{1, 3}}), InputError);
  const Graph g({5, 1, 3}, {{3, 1}, {5, 3}});
  CHECK(g.vertices() == std::vector<Vertex>{1, 3, 5});
  CHECK(g.edge_id(1, 3) == 0);
  CHECK(g.edge_id(5, 3) == 1);
  CHECK(g.edge_id(1, 5) == -1);
  CHECK_THROWS_AS(g.index_of(2), InputError);
}

TEST_CASE("common neighbors excluding a third vertex") {
  const Graph pet = petersen_fixture().graph();
  CHECK(pet.neighbors(2) == std::vector<Vertex>{1, 3, 7});
  CHECK(pet.neighbors(8) == std::vector<Vertex>{3, 6, 10});
  CHECK(common_neighbors_excluding(pet, 2, 8, 6) == std::vector<Vertex>{3});
  CHECK_THROWS_AS(common_neighbors_excluding(pet, 2, 2, 6), InputError);

  const std::uint64_t p = 29;
  const Graph g = paley_graph(PrimeField(p));
  const double bound = 5 * std::sqrt(static_cast<double>(p)) + 1;
  double worst = 0;
  for (Vertex x = 0; x < 29; ++x) {
    for (Vertex y = x + 1; y < 29; ++y) {
      for (Vertex z = 0; z < 29; ++z) {
        if (z == x || z == y) continue;
        const auto c = common_neighbors_excluding(g, x, y, z);
        for (Vertex v : c) {
          CHECK(g.adjacent(v, x));
          CHECK(g.adjacent(v, y));
          CHECK_FALSE(g.adjacent(v, z));
        }
        worst = std::max(worst, std::abs(static_cast<double>(c.size()) - 29.0 / 8));
      }
    }
  }
  CHECK(worst <= bound);
}

TEST_CASE("induced subgraphs") {
  const Graph pet = petersen_fixture().graph();
  const Graph outer = induced_subgraph(pet, {1, 2, 3, 4, 5});
  CHECK(outer.edges() == std::vector<Edge>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(induced_subgraph(pet, pet.vertices()) == pet);
  const Graph tri = induced_subgraph(paley_graph(PrimeField(29)), {0, 1, 2});
  CHECK(tri.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(induced_subgraph(pet, {1, 11}), InputError);
}

TEST_CASE("strong connectivity examples") {
  Digraph empty{std::vector<Vertex>{}};
  CHECK(strongly_connected(empty).strongly_connected);
  CHECK(strongly_connected(empty).components.empty());

  Digraph one({7});
  CHECK(strongly_connected(one).strongly_connected);

  Digraph two({1, 2});
  two.add_arc(1, 2);
  const auto r2 = strongly_connected(two);
  CHECK_FALSE(r2.strongly_connected);
  CHECK(r2.components == std::vector<std::vector<Vertex>>{{1}, {2}});

  Digraph cyc({0, 1, 2});
  cyc.add_arc(0, 1);
  cyc.add_arc(1, 2);
  cyc.add_arc(2, 0);
  cyc.add_arc(2, 0);
  CHECK(cyc.arc_count() == 3);
  const auto r3 = strongly_connected(cyc);
  CHECK(r3.strongly_connected);
  CHECK(r3.components.size() == 1);
}

TEST_CASE("strong connectivity agrees with breadth-first reachability") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 8;
    const double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    std::bernoulli_distribution coin(density);
    std::vector<Vertex> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = 3 * i + 1;
    Digraph d(labels);
    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b && coin(rng)) {
          d.add_arc(3 * a + 1, 3 * b + 1);
          arcs.emplace_back(a, b);
        }
      }
    }
    const auto scc = strongly_connected(d);
    REQUIRE(scc.strongly_connected == oracle::strongly_connected(n, arcs));

    // Same component iff mutually reachable.
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int s = 0; s < n; ++s) {
      std::vector<int> stack{s};
      reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = true;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (auto [a, b] : arcs) {
          if (a == u && !reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)]) {
            reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)] = true;
            stack.push_back(b);
          }
        }
      }
    }
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::size_t total = 0;
    Vertex previous_min = -1;
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
      const auto& members = scc.components[c];
      CHECK(std::is_sorted(members.begin(), members.end()));
      CHECK(members.front() > previous_min);
      previous_min = members.front();
      total += members.size();
      for (Vertex v : members) comp[static_cast<std::size_t>((v - 1) / 3)] = static_cast<int>(c);
    }
    CHECK(total == static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const bool mutual = reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                            reach[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        CHECK((comp[static_cast<std::size_t>(a)] == comp[static_cast<std::size_t>(b)]) == mutual);
      }
    }
  }
}

}  // TEST_SUITE
