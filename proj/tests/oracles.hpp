#ifndef SRGQ_TESTS_ORACLES_HPP
#define SRGQ_TESTS_ORACLES_HPP

// Deliberately naive reference computations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "srgq/graph.hpp"

namespace oracle {

using srgq::Edge;
using srgq::Graph;
using srgq::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

// Number of 4-cycles: distinct cyclic vertex sequences, each counted 8 times.
inline long count_4cycles(const Graph& g) {
  const auto a = adjacency(g);
  const int n = g.order();
  long seq = 0;
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (w == x || w == y || w == z || x == y || x == z || y == z) continue;
          if (a[w][x] && a[x][y] && a[y][z] && a[z][w]) ++seq;
        }
  return seq / 8;
}

// Hexagons with a long chord: every 6-cycle (12 sequences each) times the
// number of its three antipodal pairs that are adjacent.
inline long count_crossbar_6cycles(const Graph& g) {
  const auto a = adjacency(g);
  const int n = g.order();
  long total = 0;
  std::vector<int> path;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, int depth) -> void {
    const int last = path.back();
    if (depth == 6) {
      if (!a[last][path[0]]) return;
      for (int i = 0; i < 3; ++i) total += a[path[i]][path[i + 3]] ? 1 : 0;
      return;
    }
    for (int v = 0; v < n; ++v)
      if (!used[v] && a[last][v]) {
        used[v] = true;
        path.push_back(v);
        self(self, depth + 1);
        path.pop_back();
        used[v] = false;
      }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    path = {s};
    dfs(dfs, 1);
    used[s] = false;
  }
  return total / 12;
}

// Shortest cycle by trying every length-L closed walk without repeated vertices.
inline int girth(const Graph& g) {
  const auto a = adjacency(g);
  const int n = g.order();
  for (int len = 3; len <= n; ++len) {
    std::vector<int> path;
    std::vector<bool> used(n, false);
    bool found = false;
    auto dfs = [&](auto&& self) -> void {
      if (found) return;
      const int last = path.back();
      if (static_cast<int>(path.size()) == len) {
        found = a[last][path[0]];
        return;
      }
      for (int v = path[0] + 1; v < n && !found; ++v)
        if (!used[v] && a[last][v]) {
          used[v] = true;
          path.push_back(v);
          self(self);
          path.pop_back();
          used[v] = false;
        }
    };
    for (int s = 0; s < n && !found; ++s) {
      used.assign(n, false);
      used[s] = true;
      path = {s};
      dfs(dfs);
    }
    if (found) return len;
  }
  return 0;  // forest
}

inline bool on_5cycle(const Graph& g, Vertex v) {
  const auto a = adjacency(g);
  const int n = g.order();
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d)
        for (int e = 0; e < n; ++e) {
          const std::set<int> s{v, b, c, d, e};
          if (s.size() == 5 && a[v][b] && a[b][c] && a[c][d] && a[d][e] && a[e][v]) return true;
        }
  return false;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return srgq::build_graph(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return srgq::build_graph(g.order(), edges);
}

inline Graph hypercube(int d) {
  std::vector<Edge> edges;
  for (int u = 0; u < (1 << d); ++u)
    for (int b = 0; b < d; ++b)
      if (u < (u ^ (1 << b))) edges.push_back({u, u ^ (1 << b)});
  return srgq::build_graph(1 << d, edges);
}

}  // namespace oracle

#endif  // SRGQ_TESTS_ORACLES_HPP
