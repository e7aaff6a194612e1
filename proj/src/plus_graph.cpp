#include "srgq/plus_graph.hpp"

#include <algorithm>
#include <string>

#include "srgq/errors.hpp"

namespace srgq {

PlusGraph relative_plus(std::span<const EdgeId> subset, const Graph& g) {
  std::vector<int> index(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const EdgeId e = subset[i];
    if (e < 0 || e >= g.size()) throw GraphError("edge id " + std::to_string(e) + " out of range");
    if (index[e] >= 0) throw GraphError("edge id " + std::to_string(e) + " repeated in subset");
    index[e] = static_cast<int>(i);
  }
  std::vector<Edge> plus_edges;
  for (const FourCycle& c : enumerate_4cycles(g)) {
    for (int k = 0; k < 2; ++k) {
      const int a = index[c.edges[k]], b = index[c.edges[k + 2]];
      if (a >= 0 && b >= 0) plus_edges.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  // A pair of edges can be opposite in several 4-cycles (e.g. in K4).
  std::sort(plus_edges.begin(), plus_edges.end());
  plus_edges.erase(std::unique(plus_edges.begin(), plus_edges.end()), plus_edges.end());
  return {std::make_shared<const Graph>(g), build_graph(static_cast<int>(subset.size()), plus_edges),
          std::vector<EdgeId>(subset.begin(), subset.end())};
}

PlusGraph plus_graph(const Graph& g) {
  std::vector<EdgeId> all(static_cast<std::size_t>(g.size()));
  for (EdgeId e = 0; e < g.size(); ++e) all[e] = e;
  return relative_plus(all, g);
}

bool embeds_in(const PlusGraph& p, const PlusGraph& full) {
  std::vector<int> full_index(static_cast<std::size_t>(full.source->size()), -1);
  for (std::size_t i = 0; i < full.edge_of_vertex.size(); ++i) full_index[full.edge_of_vertex[i]] = static_cast<int>(i);
  for (const Edge& e : p.graph.edges()) {
    const int a = full_index[p.edge_of_vertex[e.u]], b = full_index[p.edge_of_vertex[e.v]];
    if (a < 0 || b < 0 || !full.graph.adjacent(a, b)) return false;
  }
  return true;
}

std::vector<PlusComponent> plus_components(const PlusGraph& p) {
  std::vector<PlusComponent> out;
  for (auto& verts : connected_components(p.graph)) {
    PlusComponent c;
    c.graph = induced_subgraph(p.graph, verts).graph;
    for (Vertex v : verts) c.source_edges.push_back(p.edge_of_vertex[v]);
    std::sort(c.source_edges.begin(), c.source_edges.end());
    c.vertices = std::move(verts);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const PlusComponent& a, const PlusComponent& b) {
    return a.source_edges.front() < b.source_edges.front();
  });
  return out;
}

}  // namespace srgq
