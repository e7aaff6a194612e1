#ifndef SRGQ_CONSTRUCTORS_HPP
#define SRGQ_CONSTRUCTORS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srgq/graph.hpp"

namespace srgq {

/// A 3-(22,6,1) design: 77 hexads on points 0..21.
struct SteinerSystem {
  int points = 0;
  std::vector<std::array<int, 6>> blocks;  // each sorted, list sorted
};

/// C5 = SRG(5,2,0,1).
Graph pentagon();

/// Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order,
/// adjacent iff disjoint.
Graph petersen();

/// Vertices are 4-bit labels; u ~ v iff popcount(u ^ v) is 1 or 4.
Graph clebsch();

/// Robertson's pentagons/pentagrams construction. Vertex 5h+j is vertex j of
/// pentagon P_h, vertex 25+5i+j is vertex j of pentagram Q_i, and P_h[j] ~
/// Q_i[h*i + j mod 5].
Graph hoffman_singleton();

/// T_n with rim a_i = 2i, b_i = 2i+1 (so the rim cycle is 0,1,...,2n-1),
/// alpha = 2n adjacent to every a_i and beta = 2n+1 to every b_i.
Graph trapezohedral(int n);

inline Vertex trapezohedral_a(int i) { return 2 * i; }
inline Vertex trapezohedral_b(int i) { return 2 * i + 1; }
inline Vertex trapezohedral_alpha(int n) { return 2 * n; }
inline Vertex trapezohedral_beta(int n) { return 2 * n + 1; }

/// Generator rows of the extended binary Golay code in the form [I_12 | B],
/// bit i of a word is coordinate i. B is the bordered quadratic-residue
/// circulant: B[i][j] = 1 iff (j - i) mod 11 ∈ {0,1,3,4,5,9} for i,j < 11,
/// last row and column all ones except B[11][11] = 0.
std::array<std::uint32_t, 12> golay_generator();

/// All 4096 codewords, as 24-bit masks ascending.
std::vector<std::uint32_t> golay_codewords();

/// The 759 weight-8 codewords, ascending. Self-checks the S(5,8,24)
/// property and throws InvariantError on failure.
std::vector<std::uint32_t> golay_octads();

/// Derived design: octads through points 23 and 22 with those points removed.
SteinerSystem steiner_3_6_22();

/// The 77 hexads, adjacent iff disjoint: SRG(77,16,0,4).
Graph mesner();

/// The 56 hexads avoiding point 21, adjacent iff disjoint: SRG(56,10,0,2).
Graph gewirtz();

/// Vertex 0 is the apex, 1..22 the points, 23..99 the hexads:
/// SRG(100,22,0,6).
Graph higman_sims();

/// Names accepted by graph_by_name: pentagon, petersen, clebsch,
/// hoffman-singleton, gewirtz, mesner, higman-sims.
const std::vector<std::string>& named_graphs();

/// Parameters the named graph is asserted to have.
SrgParams expected_parameters(std::string_view name);

/// Named constructor, or trapezohedral:<n>. nullopt for unknown names.
std::optional<Graph> graph_by_name(std::string_view name);

}  // namespace srgq

#endif  // SRGQ_CONSTRUCTORS_HPP
