#include "srgq/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <sstream>
#include <string>

#include "srgq/errors.hpp"

namespace srgq {

namespace {

std::string pair_text(Edge e) {
  std::ostringstream os;
  os << "(" << e.u << "," << e.v << ")";
  return os.str();
}

}  // namespace

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count " + std::to_string(n));
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw GraphError("vertex out of range in pair " + pair_text(e) + " for n=" + std::to_string(n));
    if (e.u == e.v) throw GraphError("self-loop " + pair_text(e));
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
    throw GraphError("duplicate pair " + pair_text(*dup));

  g.adj_.assign(static_cast<std::size_t>(n), BitVec(static_cast<std::size_t>(n)));
  g.nbrs_.assign(static_cast<std::size_t>(n), {});
  g.first_up_edge_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].set(e.v);
    g.adj_[e.v].set(e.u);
    g.nbrs_[e.u].push_back(e.v);
    g.nbrs_[e.v].push_back(e.u);
    ++g.first_up_edge_[e.u + 1];
  }
  for (int v = 0; v < n; ++v) {
    std::sort(g.nbrs_[v].begin(), g.nbrs_[v].end());
    g.first_up_edge_[v + 1] += g.first_up_edge_[v];
  }
  return g;
}

Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
  if (u > v) std::swap(u, v);
  if (!adj_[u].test(v)) return std::nullopt;
  const auto& nb = nbrs_[u];
  auto first_up = std::upper_bound(nb.begin(), nb.end(), u);
  auto it = std::lower_bound(first_up, nb.end(), v);
  return first_up_edge_[u] + static_cast<EdgeId>(it - first_up);
}

EdgeId Graph::edge_id_of(Vertex u, Vertex v) const {
  if (auto id = edge_id(u, v)) return *id;
  throw GraphError("not an edge: " + pair_text({u, v}));
}

bool srg_feasible(const SrgParams& p) {
  return p.n >= 0 && p.k >= 0 && p.lambda >= 0 && p.mu >= 0 &&
         static_cast<long long>(p.k) * (p.k - p.lambda - 1) ==
             static_cast<long long>(p.n - p.k - 1) * p.mu;
}

std::optional<SrgParams> srg_parameters(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  const int k = g.degree(0);
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  std::optional<int> lambda, mu;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int c = static_cast<int>(g.common_neighbors(u, v));
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  }
  return SrgParams{n, k, lambda.value_or(0), mu.value_or(0)};
}

std::vector<FourCycle> enumerate_4cycles(const Graph& g) {
  std::vector<FourCycle> out;
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    auto na = g.neighbors(a);
    auto first = std::upper_bound(na.begin(), na.end(), a);
    for (auto ib = first; ib != na.end(); ++ib) {
      for (auto id = ib + 1; id != na.end(); ++id) {
        const Vertex b = *ib, d = *id;
        BitVec common = g.adjacency(b) & g.adjacency(d);
        for (std::size_t c = common.find_next(static_cast<std::size_t>(a)); c != BitVec::npos;
             c = common.find_next(c)) {
          const Vertex cv = static_cast<Vertex>(c);
          out.push_back({{a, b, cv, d},
                         {g.edge_id_of(a, b), g.edge_id_of(b, cv), g.edge_id_of(cv, d), g.edge_id_of(d, a)}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CrossbarSixCycle> enumerate_crossbar_6cycles(const Graph& g) {
  std::vector<CrossbarSixCycle> out;
  for (EdgeId bar = 0; bar < g.size(); ++bar) {
    const auto [x, y] = g.edge(bar);
    // 3-paths x-p-q-y avoiding the bar.
    std::vector<std::pair<Vertex, Vertex>> paths;
    for (Vertex p : g.neighbors(x)) {
      if (p == y) continue;
      for (Vertex q : g.neighbors(p))
        if (q != x && q != y && g.adjacent(q, y)) paths.emplace_back(p, q);
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = i + 1; j < paths.size(); ++j) {
        const auto [p, q] = paths[i];
        const auto [r, s] = paths[j];
        if (p == r || p == s || q == r || q == s) continue;
        CrossbarSixCycle cb;
        cb.rim_vertices = {s, r, x, p, q, y};
        for (int e = 0; e < 6; ++e) cb.rim[e] = g.edge_id_of(cb.rim_vertices[e], cb.rim_vertices[(e + 1) % 6]);
        cb.bar = bar;
        out.push_back(cb);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CrossbarSixCycle& a, const CrossbarSixCycle& b) {
    return std::tie(a.bar, a.rim) < std::tie(b.bar, b.rim);
  });
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool every_vertex_on_5cycle(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  // A2[i][j] = |N(i) ∩ N(j)|, A3 = A2 * A, diag(A5)_i = sum_j A2[i][j] * A3[j][i].
  std::vector<std::int64_t> a2(n * n), a3(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      a2[i * n + j] = a2[j * n + i] =
          static_cast<std::int64_t>(g.common_neighbors(static_cast<Vertex>(i), static_cast<Vertex>(j)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (Vertex k : g.neighbors(static_cast<Vertex>(j))) a3[i * n + j] += a2[i * n + static_cast<std::size_t>(k)];
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t d = 0;
    for (std::size_t j = 0; j < n; ++j) d += a2[i * n + j] * a3[j * n + i];
    if (d <= 0) return false;
  }
  return true;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          const int len = dist[v] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges())
    if (g.common_neighbors(e.u, e.v) != 0) return false;
  return true;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return connected_components(g).size() == 1;
}

namespace {

// Colour refinement on the disjoint union so classes are comparable.
std::vector<int> refine_colours(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int total = 2 * n;
  auto nbrs = [&](int x) { return x < n ? g.neighbors(x) : h.neighbors(x - n); };
  std::vector<int> colour(static_cast<std::size_t>(total));
  for (int x = 0; x < total; ++x) colour[x] = static_cast<int>(nbrs(x).size());
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::pair<int, std::vector<int>>> sigs(static_cast<std::size_t>(total));
    for (int x = 0; x < total; ++x) {
      std::vector<int> ms;
      for (Vertex w : nbrs(x)) ms.push_back(colour[x < n ? w : w + n]);
      std::sort(ms.begin(), ms.end());
      sigs[x] = {colour[x], std::move(ms)};
      ids.emplace(sigs[x], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int x = 0; x < total; ++x) colour[x] = ids[sigs[x]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

struct IsoSearch {
  int n;
  std::vector<std::uint64_t> adj_g, adj_h;
  std::vector<int> col_g, col_h;
  std::vector<int> order;    // g-vertices in assignment order
  std::vector<int> map_g;    // g -> h or -1
  std::uint64_t used_h = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (col_h[w] != col_g[v] || ((used_h >> w) & 1u)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int u = order[i];
        ok = (((adj_g[v] >> u) & 1u) == ((adj_h[w] >> map_g[u]) & 1u));
      }
      if (!ok) continue;
      map_g[v] = w;
      used_h |= std::uint64_t{1} << w;
      if (extend(depth + 1)) return true;
      used_h &= ~(std::uint64_t{1} << w);
      map_g[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder)
    throw CapabilityError("isomorphism test limited to " + std::to_string(kMaxIsomorphismOrder) + " vertices");
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const int n = g.order();
  if (n == 0) return true;

  std::vector<int> colour = refine_colours(g, h);
  std::vector<int> hist_g, hist_h;
  for (int x = 0; x < n; ++x) hist_g.push_back(colour[x]), hist_h.push_back(colour[x + n]);
  std::sort(hist_g.begin(), hist_g.end());
  std::sort(hist_h.begin(), hist_h.end());
  if (hist_g != hist_h) return false;

  IsoSearch s;
  s.n = n;
  s.adj_g.assign(static_cast<std::size_t>(n), 0);
  s.adj_h.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) s.adj_g[e.u] |= std::uint64_t{1} << e.v, s.adj_g[e.v] |= std::uint64_t{1} << e.u;
  for (const Edge& e : h.edges()) s.adj_h[e.u] |= std::uint64_t{1} << e.v, s.adj_h[e.v] |= std::uint64_t{1} << e.u;
  s.col_g.assign(colour.begin(), colour.begin() + n);
  s.col_h.assign(colour.begin() + n, colour.end());
  s.map_g.assign(static_cast<std::size_t>(n), -1);

  // Class sizes drive the order: start each component in its rarest colour,
  // then grow along edges so adjacency constraints bite early.
  std::map<int, int> class_size;
  for (int c : s.col_g) ++class_size[c];
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  while (static_cast<int>(s.order.size()) < n) {
    int seed = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && (seed < 0 || class_size[s.col_g[v]] < class_size[s.col_g[seed]])) seed = v;
    std::queue<int> q;
    q.push(seed);
    placed[seed] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      s.order.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!placed[w]) placed[w] = true, q.push(w);
    }
  }
  return s.extend(0);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> verts(s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] < 0 || verts[i] >= g.order())
      throw GraphError("vertex " + std::to_string(verts[i]) + " out of range for induced subgraph");
    index[verts[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (Vertex w : g.neighbors(verts[i]))
      if (index[w] > static_cast<int>(i)) edges.push_back({static_cast<Vertex>(i), index[w]});
  return {build_graph(static_cast<int>(verts.size()), edges), std::move(verts)};
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) edges.push_back({e.u + g.order(), e.v + g.order()});
  return build_graph(g.order() + h.order(), edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle graph needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return build_graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return build_graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return build_graph(a + b, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return build_graph(n, edges);
}

Graph empty_graph(int n) { return build_graph(n, std::span<const Edge>{}); }

}  // namespace srgq
