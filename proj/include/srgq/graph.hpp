#ifndef SRGQ_GRAPH_HPP
#define SRGQ_GRAPH_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "srgq/bitvec.hpp"

namespace srgq {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph. Edge ids follow lexicographic (u,v)
/// order over pairs with u < v.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const BitVec& adjacency(Vertex v) const { return adj_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[v]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(static_cast<std::size_t>(v)); }

  std::span<const Edge> edges() const { return edges_; }
  Edge edge(EdgeId id) const { return edges_[id]; }

  /// Id of edge {u,v}, or nullopt when u and v are not adjacent.
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
  /// As edge_id, but throws GraphError for a non-edge.
  EdgeId edge_id_of(Vertex u, Vertex v) const;

  std::size_t common_neighbors(Vertex u, Vertex v) const { return adj_[u].and_count(adj_[v]); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);

  int n_ = 0;
  std::vector<BitVec> adj_;
  std::vector<std::vector<Vertex>> nbrs_;  // sorted
  std::vector<Edge> edges_;                // sorted, u < v
  std::vector<EdgeId> first_up_edge_;      // id of first edge (v, w) with v < w
};

/// Builds a graph; pairs may be given in either orientation and any order.
/// Throws GraphError on self-loops, out-of-range endpoints or duplicates.
Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::initializer_list<Edge> edges);

struct SrgParams {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// k(k - lambda - 1) == (n - k - 1) mu.
bool srg_feasible(const SrgParams& p);

/// (n,k,lambda,mu) when g is strongly regular, nullopt otherwise. A
/// complete or edgeless graph has no non-adjacent (resp. adjacent) pairs;
/// the missing parameter is reported as 0.
std::optional<SrgParams> srg_parameters(const Graph& g);

/// A 4-cycle (v0,v1,v2,v3,v0) with v0 the smallest vertex and v1 < v3.
/// edges[i] joins vertices[i] and vertices[(i+1)%4]. Chords are allowed;
/// in triangle-free graphs the diagonals are never adjacent.
struct FourCycle {
  std::array<Vertex, 4> vertices;
  std::array<EdgeId, 4> edges;
  friend auto operator<=>(const FourCycle&, const FourCycle&) = default;
};

/// Every 4-cycle exactly once, sorted by vertex tuple.
std::vector<FourCycle> enumerate_4cycles(const Graph& g);

/// Hexagon rim [a,b,c,d,e,f] (a shares a vertex with f) and a bar g joining
/// the two antipodal rim vertices b∩c and e∩f, so that a,b,g,f and g,c,d,e
/// are both 4-cycles.
struct CrossbarSixCycle {
  std::array<EdgeId, 6> rim;
  EdgeId bar;
  std::array<Vertex, 6> rim_vertices;  // rim[i] joins rim_vertices[i], rim_vertices[i+1]
  friend auto operator<=>(const CrossbarSixCycle&, const CrossbarSixCycle&) = default;
};

std::vector<CrossbarSixCycle> enumerate_crossbar_6cycles(const Graph& g);

/// Components as ascending vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// diag(A^5) > 0 everywhere, in exact integer arithmetic.
bool every_vertex_on_5cycle(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

bool is_triangle_free(const Graph& g);

/// Connected and 2-regular, i.e. isomorphic to C_n (n >= 3).
bool is_cycle_graph(const Graph& g);

inline constexpr int kMaxIsomorphismOrder = 64;

/// Exact isomorphism test by refinement plus backtracking. Throws
/// CapabilityError above kMaxIsomorphismOrder vertices.
bool are_isomorphic(const Graph& g, const Graph& h);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new vertex i is to_parent[i]
};

/// Subgraph induced by s (duplicates ignored, renumbered in ascending order).
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Disjoint union, h's vertices shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph empty_graph(int n);

}  // namespace srgq

#endif  // SRGQ_GRAPH_HPP
