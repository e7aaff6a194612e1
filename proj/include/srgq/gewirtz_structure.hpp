#ifndef SRGQ_GEWIRTZ_STRUCTURE_HPP
#define SRGQ_GEWIRTZ_STRUCTURE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "srgq/graph.hpp"

namespace srgq {

/// Split of SRG(56,10,0,2) into two 16-cocliques P ("points"), L ("lines")
/// and the remaining 24 vertices T, where Γ[T] is six disjoint 4-cycles.
struct PltDecomposition {
  std::vector<Vertex> P;
  std::vector<Vertex> L;
  std::vector<Vertex> T;
  std::vector<std::array<Vertex, 4>> tau_cycles;  // cyclic order, smallest first, ordered by it
  std::vector<std::pair<int, int>> pairings;      // indices into tau_cycles
};

/// The 4-trapezohedral subgraph with hubs t and t′ (t′ the vertex opposite
/// t on its τ-cycle).
struct TrapSubgraph {
  Vertex t;
  Vertex t_prime;
  std::array<Vertex, 8> rim;  // starts at the smallest line, alternates line/point
  std::array<EdgeId, 8> rim_edges;  // rim_edges[i] joins rim[i], rim[i+1]
};

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Every edge lies in exactly k-1 four-cycles that pairwise share only that
/// edge. Requires SRG(n,k,0,2); throws PreconditionError otherwise.
bool verify_nine_4cycles(const Graph& g);

/// All cocliques of the given size on at most 64 vertices, in the order a
/// branch-and-bound search finds them (ascending vertices, inclusion
/// first). Throws ResourceError past node_budget search nodes.
std::vector<std::vector<Vertex>> find_cocliques(const Graph& g, int size, std::uint64_t node_budget);

/// Searches for a decomposition and validates it. L is the coclique that
/// contains the smaller vertex id. Throws PreconditionError for graphs other
/// than SRG(56,10,0,2), ResourceError on budget exhaustion and
/// InvariantError if no pair of cocliques validates.
PltDecomposition find_plt_decomposition(const Graph& g, std::uint64_t node_budget = kDefaultSearchBudget);

/// x ∥ y: all common neighbours lie in T. x, y must be distinct and both in
/// L or both in P; throws PreconditionError otherwise.
bool parallel_test(const Graph& g, const PltDecomposition& dec, Vertex x, Vertex y);

/// The vertex opposite t on its τ-cycle.
Vertex tau_partner(const PltDecomposition& dec, Vertex t);

/// One subgraph per t ∈ T (ascending t), each checked to be isomorphic to
/// T_4; also checks every vertex of P ∪ L sees each τ-cycle exactly once.
/// Throws StructuralError naming the offending vertex.
std::vector<TrapSubgraph> trapezohedral_subgraphs(const Graph& g, const PltDecomposition& dec);

/// Pairs each τ-cycle A with the unique B whose rim edge sets partition
/// E(π). Throws StructuralError if some A has no or several partners.
std::vector<std::pair<int, int>> pair_4cycles(const Graph& g, const PltDecomposition& dec);

/// For every pairing {A,B}, every τ-cycle C outside it and every c ∈ C, the
/// rim of Z_c splits into two alternating perfect matchings, one in π_A and
/// one in π_B; and no two rim edges of any Z_a (a ∈ A ∪ B) share a rim
/// Z_c for c in another pairing. Returns false on the first violation and
/// stores a description in why when given.
bool verify_matchings(const Graph& g, const PltDecomposition& dec, std::string* why = nullptr);

/// For pairings p ≠ q and a in a τ-cycle of p, the 8 rim edges of Z_a fall
/// into 8 distinct rims Z_c, c in a τ-cycle of q.
bool verify_distribution(const Graph& g, const PltDecomposition& dec);

/// Edge ids of π = Γ[P ∪ L], ascending.
std::vector<EdgeId> pi_edges(const Graph& g, const PltDecomposition& dec);

}  // namespace srgq

#endif  // SRGQ_GEWIRTZ_STRUCTURE_HPP
