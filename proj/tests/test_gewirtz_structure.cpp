#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "srgq/constructors.hpp"
#include "srgq/errors.hpp"
#include "srgq/gewirtz_structure.hpp"

using namespace srgq;

namespace {

const Graph& gw() {
  static const Graph g = gewirtz();
  return g;
}

const PltDecomposition& dec() {
  static const PltDecomposition d = find_plt_decomposition(gw());
  return d;
}

bool contains(const std::vector<Vertex>& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); }

}  // namespace

TEST_CASE("nine edge-disjoint 4-cycles per edge") {
  CHECK(verify_nine_4cycles(gw()));
  CHECK(verify_nine_4cycles(clebsch()));
  CHECK_THROWS_AS(verify_nine_4cycles(petersen()), PreconditionError);
  // Oracle: per-edge 4-cycle count by brute force.
  const Graph c = clebsch();
  const auto a = oracle::adjacency(c);
  for (const Edge& e : c.edges()) {
    int through = 0;
    for (int x = 0; x < 16; ++x)
      for (int y = 0; y < 16; ++y)
        if (x != e.u && x != e.v && y != e.u && y != e.v && x != y && a[e.v][x] && a[x][y] && a[y][e.u]) ++through;
    CHECK(through == 4);
  }
}

TEST_CASE("coclique search") {
  CHECK(find_cocliques(cycle_graph(5), 2, 1000).size() == 5);
  CHECK(find_cocliques(cycle_graph(5), 3, 1000).empty());
  CHECK_THROWS_AS(find_cocliques(gw(), 16, 10), ResourceError);
  CHECK_THROWS_AS(find_plt_decomposition(gw(), 10), ResourceError);
  CHECK_THROWS_AS(find_plt_decomposition(clebsch()), PreconditionError);
}

TEST_CASE("decomposition shape and edge counts") {
  const auto& d = dec();
  CHECK(d.P.size() == 16);
  CHECK(d.L.size() == 16);
  CHECK(d.T.size() == 24);
  CHECK(d.L.front() < d.P.front());
  const auto tau = induced_subgraph(gw(), d.T);
  CHECK(are_isomorphic(tau.graph, [] {
    Graph g = cycle_graph(4);
    for (int i = 1; i < 6; ++i) g = disjoint_union(g, cycle_graph(4));
    return g;
  }()));
  int pi = 0, cross = 0, inside = 0;
  for (const Edge& e : gw().edges()) {
    const bool tu = contains(d.T, e.u), tv = contains(d.T, e.v);
    (tu && tv ? inside : (tu || tv) ? cross : pi) += 1;
  }
  CHECK(pi == 64);
  CHECK(cross == 192);
  CHECK(inside == 24);
  CHECK(pi_edges(gw(), d).size() == 64);
  CHECK(d.tau_cycles.size() == 6);
  CHECK(d.pairings.size() == 3);
}

TEST_CASE("parallel classes of lines") {
  const auto& d = dec();
  for (Vertex x : d.L) {
    int parallels = 0;
    for (Vertex y : d.L) {
      if (y == x) continue;
      if (parallel_test(gw(), d, x, y)) ++parallels;
      else {
        int in_p = 0;
        for (Vertex p : d.P) in_p += gw().adjacent(x, p) && gw().adjacent(y, p);
        CHECK(in_p == 1);
      }
    }
    CHECK(parallels == 3);
  }
  CHECK_THROWS_AS(parallel_test(gw(), d, d.L[0], d.L[0]), PreconditionError);
  CHECK_THROWS_AS(parallel_test(gw(), d, d.L[0], d.P[0]), PreconditionError);
}

TEST_CASE("trapezohedral subgraphs") {
  const auto& d = dec();
  const auto subs = trapezohedral_subgraphs(gw(), d);
  REQUIRE(subs.size() == 24);
  const Graph t4 = trapezohedral(4);
  for (const auto& z : subs) {
    CHECK(z.t_prime == tau_partner(d, z.t));
    std::vector<Vertex> verts(z.rim.begin(), z.rim.end());
    verts.push_back(z.t);
    verts.push_back(z.t_prime);
    const auto sub = induced_subgraph(gw(), verts);
    CHECK(sub.graph.order() == 10);
    CHECK(sub.graph.size() == 16);
    CHECK(are_isomorphic(sub.graph, t4));
    for (int i = 0; i < 8; ++i) {
      CHECK(gw().edge_id(z.rim[i], z.rim[(i + 1) % 8]) == z.rim_edges[i]);
      CHECK(contains(d.L, z.rim[i]) == (i % 2 == 0));
    }
  }
  // The four rims for one tau-cycle partition P and L.
  for (const auto& cyc : d.tau_cycles) {
    std::set<Vertex> covered;
    for (const auto& z : subs)
      if (std::find(cyc.begin(), cyc.end(), z.t) != cyc.end()) covered.insert(z.rim.begin(), z.rim.end());
    CHECK(covered.size() == 32);
  }
}

TEST_CASE("pairings and matchings") {
  const auto& d = dec();
  const auto pairs = pair_4cycles(gw(), d);
  CHECK(pairs.size() == 3);
  CHECK(pairs == d.pairings);
  std::string why;
  CHECK(verify_matchings(gw(), d, &why));
  CHECK(why.empty());
  CHECK(verify_distribution(gw(), d));

  PltDecomposition wrong = d;
  // Swap partners between the first two pairings.
  std::swap(wrong.pairings[0].second, wrong.pairings[1].second);
  CHECK_FALSE(verify_matchings(gw(), wrong, &why));
  CHECK_FALSE(why.empty());
}
