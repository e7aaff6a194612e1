#ifndef SRGQ_PLUS_GRAPH_HPP
#define SRGQ_PLUS_GRAPH_HPP

#include <memory>
#include <span>
#include <vector>

#include "srgq/graph.hpp"

namespace srgq {

/// Graph on a set of source edges; two are adjacent iff they are opposite
/// sides of some 4-cycle of the source graph.
struct PlusGraph {
  std::shared_ptr<const Graph> source;
  Graph graph;
  std::vector<EdgeId> edge_of_vertex;  // plus-vertex i is source edge edge_of_vertex[i]
};

/// Plus graph over all edges; plus-vertex i is source edge i.
PlusGraph plus_graph(const Graph& g);

/// Plus graph restricted to the edges in subset (kept in the given order),
/// with 4-cycles taken in all of g. Throws GraphError for invalid or
/// repeated edge ids.
PlusGraph relative_plus(std::span<const EdgeId> subset, const Graph& g);

/// True iff every edge of p maps onto an edge of full under the
/// back-mapping (p is a subgraph of the full plus graph).
bool embeds_in(const PlusGraph& p, const PlusGraph& full);

struct PlusComponent {
  std::vector<Vertex> vertices;      // plus-vertices, ascending
  std::vector<EdgeId> source_edges;  // their source edges, ascending
  Graph graph;                       // induced plus subgraph
};

/// Components ordered by smallest contained source edge id.
std::vector<PlusComponent> plus_components(const PlusGraph& p);

}  // namespace srgq

#endif  // SRGQ_PLUS_GRAPH_HPP
