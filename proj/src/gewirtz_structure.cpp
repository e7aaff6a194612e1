#include "srgq/gewirtz_structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "srgq/bitvec.hpp"
#include "srgq/constructors.hpp"
#include "srgq/errors.hpp"

namespace srgq {

namespace {

enum class Side { T, P, L };

std::vector<Side> sides(const Graph& g, const PltDecomposition& dec) {
  std::vector<Side> s(static_cast<std::size_t>(g.order()), Side::T);
  for (Vertex v : dec.P) s[v] = Side::P;
  for (Vertex v : dec.L) s[v] = Side::L;
  return s;
}

std::vector<int> tau_index(const Graph& g, const PltDecomposition& dec) {
  std::vector<int> idx(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < dec.tau_cycles.size(); ++i)
    for (Vertex v : dec.tau_cycles[i]) idx[v] = static_cast<int>(i);
  return idx;
}

std::string vname(Vertex v) { return std::to_string(v); }

struct CocliqueSearch {
  int n;
  int target;
  std::vector<std::uint64_t> adj;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::vector<Vertex>> found;

  void run(std::uint64_t chosen, std::uint64_t cand, int size) {
    if (++nodes > budget) throw ResourceError("coclique search exceeded budget of " + std::to_string(budget) + " nodes");
    if (size == target) {
      std::vector<Vertex> s;
      for (std::uint64_t m = chosen; m; m &= m - 1) s.push_back(std::countr_zero(m));
      found.push_back(std::move(s));
      return;
    }
    while (cand != 0) {
      if (size + std::popcount(cand) < target) return;
      const int v = std::countr_zero(cand);
      const std::uint64_t above = v == 63 ? 0 : (~std::uint64_t{0} << (v + 1));
      run(chosen | (std::uint64_t{1} << v), cand & ~adj[v] & above, size + 1);
      cand &= ~(std::uint64_t{1} << v);
    }
  }
};

// Four vertices of a 4-cycle component in cyclic order from the smallest,
// smaller neighbour second.
std::array<Vertex, 4> cyclic_order(const Graph& g, std::vector<Vertex> comp) {
  std::sort(comp.begin(), comp.end());
  const Vertex a = comp[0];
  std::vector<Vertex> nb;
  for (Vertex v : comp)
    if (g.adjacent(a, v)) nb.push_back(v);
  const Vertex b = nb[0], d = nb[1];
  Vertex c = -1;
  for (Vertex v : comp)
    if (v != a && v != b && v != d) c = v;
  return {a, b, c, d};
}

bool is_six_c4(const Graph& g, const std::vector<Vertex>& T) {
  const auto sub = induced_subgraph(g, T);
  const auto comps = connected_components(sub.graph);
  if (comps.size() != 6) return false;
  for (const auto& c : comps) {
    if (c.size() != 4) return false;
    for (Vertex v : c)
      if (sub.graph.degree(v) != 2) return false;
  }
  return true;
}

std::vector<std::array<Vertex, 4>> tau_cycles_of(const Graph& g, const std::vector<Vertex>& T) {
  const auto sub = induced_subgraph(g, T);
  std::vector<std::array<Vertex, 4>> out;
  for (auto comp : connected_components(sub.graph)) {
    for (Vertex& v : comp) v = sub.to_parent[v];
    out.push_back(cyclic_order(g, comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Rim edge sets of the four subgraphs hung on the vertices of one τ-cycle.
BitVec cycle_rim_edges(const Graph& g, const std::map<Vertex, TrapSubgraph>& traps, const std::array<Vertex, 4>& cyc) {
  BitVec e(static_cast<std::size_t>(g.size()));
  for (Vertex a : cyc)
    for (EdgeId id : traps.at(a).rim_edges) e.set(static_cast<std::size_t>(id));
  return e;
}

std::map<Vertex, TrapSubgraph> traps_by_hub(const Graph& g, const PltDecomposition& dec) {
  std::map<Vertex, TrapSubgraph> m;
  for (auto& z : trapezohedral_subgraphs(g, dec)) m.emplace(z.t, z);
  return m;
}

}  // namespace

bool verify_nine_4cycles(const Graph& g) {
  const auto p = srg_parameters(g);
  if (!p || p->lambda != 0 || p->mu != 2)
    throw PreconditionError("4-cycle count check needs an SRG with lambda = 0 and mu = 2");
  std::vector<std::vector<const FourCycle*>> through(static_cast<std::size_t>(g.size()));
  const auto cycles = enumerate_4cycles(g);
  for (const auto& c : cycles)
    for (EdgeId e : c.edges) through[e].push_back(&c);
  const std::size_t expected = static_cast<std::size_t>(p->k - 1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (through[e].size() != expected) return false;
    std::set<EdgeId> seen{e};
    for (const FourCycle* c : through[e])
      for (EdgeId f : c->edges)
        if (f != e && !seen.insert(f).second) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> find_cocliques(const Graph& g, int size, std::uint64_t node_budget) {
  if (g.order() > 64) throw CapabilityError("coclique search limited to 64 vertices");
  CocliqueSearch s{g.order(), size, std::vector<std::uint64_t>(static_cast<std::size_t>(g.order()), 0), node_budget, 0, {}};
  for (const Edge& e : g.edges()) {
    s.adj[e.u] |= std::uint64_t{1} << e.v;
    s.adj[e.v] |= std::uint64_t{1} << e.u;
  }
  const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.order()) - 1);
  s.run(0, all, 0);
  return s.found;
}

PltDecomposition find_plt_decomposition(const Graph& g, std::uint64_t node_budget) {
  const auto p = srg_parameters(g);
  if (!p || !(*p == SrgParams{56, 10, 0, 2}))
    throw PreconditionError("decomposition search needs SRG(56,10,0,2)");
  // Hoffman bound n * (-s) / (k - s) with s = -4: cocliques have at most 16 vertices.
  constexpr int kCocliqueSize = 16;
  const auto cocliques = find_cocliques(g, kCocliqueSize, node_budget);
  for (std::size_t i = 0; i < cocliques.size(); ++i) {
    for (std::size_t j = i + 1; j < cocliques.size(); ++j) {
      const auto& x = cocliques[i];
      const auto& y = cocliques[j];
      std::vector<Vertex> both;
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
      if (both.size() != 2 * kCocliqueSize) continue;
      PltDecomposition dec;
      const bool x_first = x.front() < y.front();
      dec.L = x_first ? x : y;
      dec.P = x_first ? y : x;
      for (Vertex v = 0; v < g.order(); ++v)
        if (!std::binary_search(both.begin(), both.end(), v)) dec.T.push_back(v);
      if (!is_six_c4(g, dec.T)) continue;
      dec.tau_cycles = tau_cycles_of(g, dec.T);
      try {
        dec.pairings = pair_4cycles(g, dec);
      } catch (const StructuralError&) {
        continue;
      }
      return dec;
    }
  }
  throw InvariantError("no pair of 16-cocliques yields a valid decomposition");
}

bool parallel_test(const Graph& g, const PltDecomposition& dec, Vertex x, Vertex y) {
  if (x == y) throw PreconditionError("parallel test needs two distinct vertices");
  const auto side = sides(g, dec);
  if (side[x] == Side::T || side[x] != side[y])
    throw PreconditionError("parallel test needs two lines or two points, got " + vname(x) + " and " + vname(y));
  if (g.adjacent(x, y)) throw PreconditionError("parallel test arguments are adjacent");
  BitVec common = g.adjacency(x) & g.adjacency(y);
  for (std::size_t v = common.find_first(); v != BitVec::npos; v = common.find_next(v))
    if (side[v] != Side::T) return false;
  return true;
}

Vertex tau_partner(const PltDecomposition& dec, Vertex t) {
  for (const auto& c : dec.tau_cycles)
    for (int i = 0; i < 4; ++i)
      if (c[i] == t) return c[(i + 2) % 4];
  throw PreconditionError("vertex " + vname(t) + " is not on a τ-cycle");
}

std::vector<TrapSubgraph> trapezohedral_subgraphs(const Graph& g, const PltDecomposition& dec) {
  const auto side = sides(g, dec);
  const auto tidx = tau_index(g, dec);
  for (const auto* part : {&dec.P, &dec.L})
    for (Vertex x : *part) {
      std::vector<int> hits(dec.tau_cycles.size(), 0);
      for (Vertex w : g.neighbors(x))
        if (side[w] == Side::T) ++hits[tidx[w]];
      if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
        throw StructuralError("vertex " + vname(x) + " does not meet every τ-cycle exactly once");
    }

  const Graph t4 = trapezohedral(4);
  std::vector<TrapSubgraph> out;
  for (Vertex t : dec.T) {
    const Vertex tp = tau_partner(dec, t);
    std::vector<Vertex> lines, points;
    for (Vertex w : g.neighbors(t))
      if (side[w] == Side::L) lines.push_back(w);
    for (Vertex w : g.neighbors(tp))
      if (side[w] == Side::P) points.push_back(w);
    if (lines.size() != 4 || points.size() != 4)
      throw StructuralError("Z_" + vname(t) + " does not have four lines and four points on its rim");
    std::vector<Vertex> verts = lines;
    verts.insert(verts.end(), points.begin(), points.end());
    verts.push_back(t);
    verts.push_back(tp);
    if (!are_isomorphic(induced_subgraph(g, verts).graph, t4))
      throw StructuralError("Z_" + vname(t) + " is not isomorphic to T_4");

    // Walk the rim 8-cycle.
    std::vector<Vertex> rimset(lines);
    rimset.insert(rimset.end(), points.begin(), points.end());
    std::sort(rimset.begin(), rimset.end());
    auto rim_nbrs = [&](Vertex v) {
      std::vector<Vertex> r;
      for (Vertex w : rimset)
        if (g.adjacent(v, w)) r.push_back(w);
      return r;
    };
    TrapSubgraph z{t, tp, {}, {}};
    z.rim[0] = *std::min_element(lines.begin(), lines.end());
    auto first = rim_nbrs(z.rim[0]);
    if (first.size() != 2) throw StructuralError("rim of Z_" + vname(t) + " is not a cycle");
    z.rim[1] = first[0];
    for (int i = 2; i < 8; ++i) {
      auto nb = rim_nbrs(z.rim[i - 1]);
      if (nb.size() != 2) throw StructuralError("rim of Z_" + vname(t) + " is not a cycle");
      z.rim[i] = nb[0] == z.rim[i - 2] ? nb[1] : nb[0];
    }
    for (int i = 0; i < 8; ++i) {
      const Vertex a = z.rim[i], b = z.rim[(i + 1) % 8];
      if (!g.adjacent(a, b)) throw StructuralError("rim of Z_" + vname(t) + " does not close");
      const bool want_line = i % 2 == 0;
      if ((side[a] == Side::L) != want_line || (want_line ? !g.adjacent(a, t) : !g.adjacent(a, tp)))
        throw StructuralError("rim of Z_" + vname(t) + " does not alternate lines of t and points of t'");
      z.rim_edges[i] = g.edge_id_of(a, b);
    }
    out.push_back(z);
  }
  return out;
}

std::vector<EdgeId> pi_edges(const Graph& g, const PltDecomposition& dec) {
  const auto side = sides(g, dec);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (side[g.edge(e).u] != Side::T && side[g.edge(e).v] != Side::T) out.push_back(e);
  return out;
}

std::vector<std::pair<int, int>> pair_4cycles(const Graph& g, const PltDecomposition& dec) {
  const auto traps = traps_by_hub(g, dec);
  const auto pi = pi_edges(g, dec);
  BitVec pi_set(static_cast<std::size_t>(g.size()));
  for (EdgeId e : pi) pi_set.set(static_cast<std::size_t>(e));

  const int nc = static_cast<int>(dec.tau_cycles.size());
  std::vector<BitVec> rim_sets;
  for (const auto& c : dec.tau_cycles) {
    rim_sets.push_back(cycle_rim_edges(g, traps, c));
    if (rim_sets.back().count() != pi.size() / 2)
      throw StructuralError("rims on τ-cycle starting " + vname(c[0]) + " do not cover half of π");
  }
  std::vector<int> partner(static_cast<std::size_t>(nc), -1);
  for (int a = 0; a < nc; ++a) {
    for (int b = 0; b < nc; ++b) {
      if (a == b || rim_sets[a].and_count(rim_sets[b]) != 0 || !((rim_sets[a] | rim_sets[b]) == pi_set)) continue;
      if (partner[a] >= 0)
        throw StructuralError("τ-cycle starting " + vname(dec.tau_cycles[a][0]) + " has several partners");
      partner[a] = b;
    }
    if (partner[a] < 0) throw StructuralError("τ-cycle starting " + vname(dec.tau_cycles[a][0]) + " has no partner");
  }
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < nc; ++a) {
    if (partner[partner[a]] != a) throw StructuralError("τ-cycle pairing is not symmetric");
    if (a < partner[a]) out.emplace_back(a, partner[a]);
  }
  return out;
}

bool verify_matchings(const Graph& g, const PltDecomposition& dec, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int nc = static_cast<int>(dec.tau_cycles.size());
  for (const auto& [a, b] : dec.pairings)
    if (a < 0 || b < 0 || a >= nc || b >= nc || a == b) throw StructuralError("pairing index out of range");

  const auto traps = traps_by_hub(g, dec);
  for (const auto& [a, b] : dec.pairings) {
    const BitVec in_a = cycle_rim_edges(g, traps, dec.tau_cycles[a]);
    const BitVec in_b = cycle_rim_edges(g, traps, dec.tau_cycles[b]);
    for (int c = 0; c < nc; ++c) {
      if (c == a || c == b) continue;
      for (Vertex hub : dec.tau_cycles[c]) {
        const auto& rim = traps.at(hub).rim_edges;
        int count_a = 0, count_b = 0;
        for (int i = 0; i < 8; ++i) {
          const bool ea = in_a.test(static_cast<std::size_t>(rim[i]));
          const bool eb = in_b.test(static_cast<std::size_t>(rim[i]));
          count_a += ea;
          count_b += eb;
          if (ea == eb || ea == in_a.test(static_cast<std::size_t>(rim[(i + 1) % 8])))
            return fail("rim of Z_" + vname(hub) + " does not alternate between the pairing's halves");
        }
        if (count_a != 4 || count_b != 4)
          return fail("rim of Z_" + vname(hub) + " meets a pairing half in other than 4 edges");
      }
    }
  }

  // No two rim edges of one subgraph share a rim from another pairing.
  for (const auto& p : dec.pairings)
    for (const auto& q : dec.pairings) {
      if (p == q) continue;
      for (int side_p : {p.first, p.second})
        for (Vertex x : dec.tau_cycles[side_p])
          for (int side_q : {q.first, q.second})
            for (Vertex y : dec.tau_cycles[side_q]) {
              int shared = 0;
              for (EdgeId e : traps.at(x).rim_edges) {
                const auto& ry = traps.at(y).rim_edges;
                shared += std::find(ry.begin(), ry.end(), e) != ry.end();
              }
              if (shared > 1)
                return fail("rims of Z_" + vname(x) + " and Z_" + vname(y) + " share " + std::to_string(shared) +
                            " edges");
            }
    }
  return true;
}

bool verify_distribution(const Graph& g, const PltDecomposition& dec) {
  const auto traps = traps_by_hub(g, dec);
  for (const auto& p : dec.pairings)
    for (const auto& q : dec.pairings) {
      if (p == q) continue;
      std::map<EdgeId, std::vector<Vertex>> owner;  // rim edge -> hubs in q containing it
      for (int cq : {q.first, q.second})
        for (Vertex y : dec.tau_cycles[cq])
          for (EdgeId e : traps.at(y).rim_edges) owner[e].push_back(y);
      for (int cp : {p.first, p.second})
        for (Vertex x : dec.tau_cycles[cp]) {
          std::set<Vertex> hubs;
          for (EdgeId e : traps.at(x).rim_edges) {
            auto it = owner.find(e);
            if (it == owner.end() || it->second.size() != 1) return false;
            hubs.insert(it->second.front());
          }
          if (hubs.size() != 8) return false;
        }
    }
  return true;
}

}  // namespace srgq
