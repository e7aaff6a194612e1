#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "srgq/constructors.hpp"
#include "srgq/errors.hpp"
#include "srgq/graph.hpp"

using namespace srgq;

TEST_CASE("build_graph basics and validation") {
  const Graph k2 = build_graph(2, {{0, 1}});
  CHECK(k2.size() == 1);
  CHECK(k2.edge_id(1, 0) == 0);
  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(c4.size() == 4);
  CHECK(c4.edge(0) == Edge{0, 1});
  CHECK(c4.edge_id_of(3, 0) == 1);
  CHECK_FALSE(c4.edge_id(0, 2).has_value());
  CHECK_THROWS_AS(c4.edge_id_of(0, 2), GraphError);
  const Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(srg_parameters(c5) == SrgParams{5, 2, 0, 1});
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(build_graph(3, {{0, -1}}), GraphError);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), GraphError);
  try {
    build_graph(3, {{2, 2}});
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("(2,2)") != std::string::npos);
  }
}

TEST_CASE("edge ids follow lexicographic order on random graphs") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = oracle::random_graph(rng, 12, 0.4);
    for (EdgeId i = 0; i < g.size(); ++i) {
      const Edge e = g.edge(i);
      CHECK(e.u < e.v);
      if (i > 0) CHECK(g.edge(i - 1) < e);
      CHECK(g.edge_id(e.u, e.v) == i);
      CHECK(g.edge_id(e.v, e.u) == i);
    }
    for (Vertex v = 0; v < g.order(); ++v) CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
  }
}

TEST_CASE("srg_parameters") {
  CHECK(srg_parameters(clebsch()) == SrgParams{16, 5, 0, 2});
  CHECK(srg_parameters(petersen()) == SrgParams{10, 3, 0, 1});
  CHECK_FALSE(srg_parameters(path_graph(3)).has_value());
  CHECK_FALSE(srg_parameters(cycle_graph(6)).has_value());  // mu differs for distance 2 and 3
  CHECK(srg_feasible({16, 5, 0, 2}));
  CHECK_FALSE(srg_feasible({16, 5, 0, 3}));
}

TEST_CASE("4-cycle enumeration matches brute force") {
  CHECK(enumerate_4cycles(cycle_graph(4)).size() == 1);
  CHECK(enumerate_4cycles(clebsch()).size() == 40);
  CHECK(enumerate_4cycles(gewirtz()).size() == 630);
  CHECK(static_cast<long>(enumerate_4cycles(complete_graph(5)).size()) == oracle::count_4cycles(complete_graph(5)));

  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 13);
    const Graph g = oracle::random_graph(rng, n, 0.15 + 0.05 * (rep % 8));
    const auto cycles = enumerate_4cycles(g);
    CHECK(static_cast<long>(cycles.size()) == oracle::count_4cycles(g));
    CHECK(std::is_sorted(cycles.begin(), cycles.end()));
    for (const FourCycle& c : cycles) {
      CHECK(c.vertices[0] == *std::min_element(c.vertices.begin(), c.vertices.end()));
      CHECK(c.vertices[1] < c.vertices[3]);
      for (int i = 0; i < 4; ++i) CHECK(g.edge_id(c.vertices[i], c.vertices[(i + 1) % 4]) == c.edges[i]);
    }
  }
}

TEST_CASE("crossbar 6-cycles") {
  // Hexagon 0..5 with the long chord 0-3.
  const Graph fig = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  const auto one = enumerate_crossbar_6cycles(fig);
  REQUIRE(one.size() == 1);
  CHECK(fig.edge(one[0].bar) == Edge{0, 3});
  for (int i = 0; i < 6; ++i)
    CHECK(fig.edge_id(one[0].rim_vertices[i], one[0].rim_vertices[(i + 1) % 6]) == one[0].rim[i]);
  CHECK(enumerate_crossbar_6cycles(cycle_graph(6)).empty());
  CHECK(enumerate_crossbar_6cycles(complete_graph(4)).empty());

  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = oracle::random_graph(rng, 6 + static_cast<int>(rng() % 4), 0.35);
    CHECK(static_cast<long>(enumerate_crossbar_6cycles(g).size()) == oracle::count_crossbar_6cycles(g));
  }
  CHECK(static_cast<long>(enumerate_crossbar_6cycles(clebsch()).size()) == oracle::count_crossbar_6cycles(clebsch()));
}

TEST_CASE("connected components") {
  const Graph six_c4 = [] {
    Graph g = cycle_graph(4);
    for (int i = 1; i < 6; ++i) g = disjoint_union(g, cycle_graph(4));
    return g;
  }();
  const auto comps = connected_components(six_c4);
  CHECK(comps.size() == 6);
  for (const auto& c : comps) CHECK(c.size() == 4);
  CHECK(connected_components(empty_graph(3)).size() == 3);
  CHECK(connected_components(clebsch()).size() == 1);
}

TEST_CASE("every_vertex_on_5cycle") {
  CHECK(every_vertex_on_5cycle(cycle_graph(5)));
  CHECK_FALSE(every_vertex_on_5cycle(cycle_graph(4)));
  CHECK(every_vertex_on_5cycle(gewirtz()));
  CHECK(every_vertex_on_5cycle(complete_graph(3)));  // closed walks, not cycles
  std::mt19937_64 rng(14);
  for (int rep = 0; rep < 25; ++rep) {
    // Closed 5-walks and 5-cycles coincide only without triangles.
    const Graph g = oracle::random_graph(rng, 6 + static_cast<int>(rng() % 4), 0.3);
    if (!is_triangle_free(g)) continue;
    bool all = true;
    for (Vertex v = 0; v < g.order(); ++v) all = all && oracle::on_5cycle(g, v);
    CHECK(every_vertex_on_5cycle(g) == all);
  }
}

TEST_CASE("girth against brute force") {
  CHECK(girth(petersen()) == 5);
  CHECK(girth(hoffman_singleton()) == 5);
  CHECK(girth(clebsch()) == 4);
  CHECK_FALSE(girth(path_graph(5)).has_value());
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = oracle::random_graph(rng, 5 + static_cast<int>(rng() % 6), 0.25);
    CHECK(girth(g).value_or(0) == oracle::girth(g));
    CHECK(is_triangle_free(g) == (oracle::girth(g) != 3));
  }
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(trapezohedral(3), oracle::hypercube(3)));
  CHECK_FALSE(are_isomorphic(cycle_graph(8), disjoint_union(cycle_graph(4), cycle_graph(4))));
  std::vector<int> perm{3, 6, 1, 0, 7, 2, 5, 4};
  CHECK(are_isomorphic(complete_bipartite(4, 4), oracle::relabel(complete_bipartite(4, 4), perm)));
  CHECK_THROWS_AS(are_isomorphic(cycle_graph(65), cycle_graph(65)), CapabilityError);

  std::mt19937_64 rng(16);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 5 + static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const Graph h = oracle::relabel(g, p);
    CHECK(are_isomorphic(g, g));
    CHECK(are_isomorphic(g, h));
    CHECK(are_isomorphic(h, g));
    // Symmetry on an unrelated pair.
    const Graph other = oracle::random_graph(rng, n, 0.3);
    CHECK(are_isomorphic(g, other) == are_isomorphic(other, g));
  }
  // Regular graphs where refinement alone does not decide.
  CHECK(are_isomorphic(petersen(), oracle::relabel(petersen(), {9, 8, 7, 6, 5, 4, 3, 2, 1, 0})));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK(are_isomorphic(clebsch(), oracle::relabel(clebsch(), {5, 2, 9, 0, 15, 1, 3, 4, 6, 7, 8, 10, 11, 12, 13, 14})));
  CHECK_FALSE(are_isomorphic(clebsch(), oracle::hypercube(4)));
}

TEST_CASE("induced subgraphs") {
  const Graph c = clebsch();
  for (Vertex v = 0; v < c.order(); ++v) {
    const auto nb = c.neighbors(v);
    const auto sub = induced_subgraph(c, nb);
    CHECK(sub.graph.order() == 5);
    CHECK(sub.graph.size() == 0);
  }
  std::vector<Vertex> all(c.order());
  std::iota(all.begin(), all.end(), 0);
  CHECK(induced_subgraph(c, all).graph == c);
  std::vector<Vertex> dup{3, 1, 1, 0};
  const auto s = induced_subgraph(cycle_graph(4), dup);
  CHECK(s.to_parent == std::vector<Vertex>{0, 1, 3});
  CHECK(s.graph.size() == 2);
}

TEST_CASE("builders") {
  CHECK(cycle_graph(7).size() == 7);
  CHECK(complete_graph(6).size() == 15);
  CHECK(complete_bipartite(3, 4).size() == 12);
  CHECK(path_graph(4).size() == 3);
  CHECK(is_cycle_graph(cycle_graph(9)));
  CHECK_FALSE(is_cycle_graph(disjoint_union(cycle_graph(4), cycle_graph(5))));
}
