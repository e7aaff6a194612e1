#include "srgq/constructors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <string>

#include "srgq/errors.hpp"

namespace srgq {

namespace {

Graph checked(std::string_view name, Graph g) {
  const SrgParams want = expected_parameters(name);
  const auto got = srg_parameters(g);
  if (!got || !(*got == want))
    throw InvariantError("constructed " + std::string(name) + " failed SRG parameter check");
  return g;
}

template <class Set, class Pred>
Graph graph_on(const std::vector<Set>& items, Pred adjacent) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(items.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adjacent(items[i], items[j])) edges.push_back({i, j});
  return build_graph(n, edges);
}

bool disjoint(const std::array<int, 6>& a, const std::array<int, 6>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

// Combinatorial number system rank of a sorted 5-subset of 0..23.
std::size_t rank5(const int* c) {
  auto binom = [](int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return n < k ? std::size_t{0} : r;
  };
  std::size_t r = 0;
  for (int i = 0; i < 5; ++i) r += binom(c[i], i + 1);
  return r;
}

}  // namespace

Graph pentagon() { return checked("pentagon", cycle_graph(5)); }

Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  return checked("petersen", graph_on(pairs, [](auto a, auto b) {
                   return a.first != b.first && a.first != b.second && a.second != b.first && a.second != b.second;
                 }));
}

Graph clebsch() {
  std::vector<Edge> edges;
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v) {
      const int d = std::popcount(static_cast<unsigned>(u ^ v));
      if (d == 1 || d == 4) edges.push_back({u, v});
    }
  return checked("clebsch", build_graph(16, edges));
}

Graph hoffman_singleton() {
  auto p = [](int h, int j) { return 5 * h + ((j % 5) + 5) % 5; };
  auto q = [](int i, int j) { return 25 + 5 * i + ((j % 5) + 5) % 5; };
  std::vector<Edge> edges;
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) {
      edges.push_back({p(h, j), p(h, j + 1)});
      edges.push_back({q(h, j), q(h, j + 2)});
    }
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j)
      for (int i = 0; i < 5; ++i) edges.push_back({p(h, j), q(i, h * i + j)});
  return checked("hoffman-singleton", build_graph(50, edges));
}

Graph trapezohedral(int n) {
  if (n < 3) throw DomainError("trapezohedral graph needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int r = 0; r < 2 * n; ++r) edges.push_back({r, (r + 1) % (2 * n)});
  for (int i = 0; i < n; ++i) {
    edges.push_back({trapezohedral_alpha(n), trapezohedral_a(i)});
    edges.push_back({trapezohedral_beta(n), trapezohedral_b(i)});
  }
  return build_graph(2 * n + 2, edges);
}

std::array<std::uint32_t, 12> golay_generator() {
  constexpr std::array<int, 6> kResidues{0, 1, 3, 4, 5, 9};
  std::array<std::uint32_t, 12> rows{};
  for (int i = 0; i < 12; ++i) {
    std::uint32_t w = std::uint32_t{1} << i;
    for (int j = 0; j < 12; ++j) {
      bool bit;
      if (i == 11) bit = j != 11;
      else if (j == 11) bit = true;
      else bit = std::find(kResidues.begin(), kResidues.end(), ((j - i) % 11 + 11) % 11) != kResidues.end();
      if (bit) w |= std::uint32_t{1} << (12 + j);
    }
    rows[i] = w;
  }
  return rows;
}

std::vector<std::uint32_t> golay_codewords() {
  const auto gen = golay_generator();
  std::vector<std::uint32_t> words;
  words.reserve(4096);
  for (std::uint32_t m = 0; m < 4096; ++m) {
    std::uint32_t w = 0;
    for (int i = 0; i < 12; ++i)
      if ((m >> i) & 1u) w ^= gen[i];
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return words;
}

std::vector<std::uint32_t> golay_octads() {
  std::vector<std::uint32_t> octads;
  for (std::uint32_t w : golay_codewords())
    if (std::popcount(w) == 8) octads.push_back(w);
  if (octads.size() != 759) throw InvariantError("expected 759 octads, found " + std::to_string(octads.size()));

  // Each 5-subset of the 24 points lies in exactly one octad.
  std::vector<std::uint8_t> hits(42504, 0);
  for (std::uint32_t o : octads) {
    int pts[8], k = 0;
    for (int i = 0; i < 24; ++i)
      if ((o >> i) & 1u) pts[k++] = i;
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int c = b + 1; c < 8; ++c)
          for (int d = c + 1; d < 8; ++d)
            for (int e = d + 1; e < 8; ++e) {
              const int sub[5] = {pts[a], pts[b], pts[c], pts[d], pts[e]};
              if (++hits[rank5(sub)] > 1) throw InvariantError("5-subset covered twice by octads");
            }
  }
  if (std::find(hits.begin(), hits.end(), 0) != hits.end())
    throw InvariantError("5-subset not covered by any octad");
  return octads;
}

SteinerSystem steiner_3_6_22() {
  constexpr int p = 23, q = 22;
  constexpr std::uint32_t pq = (std::uint32_t{1} << p) | (std::uint32_t{1} << q);
  SteinerSystem s;
  s.points = 22;
  for (std::uint32_t o : golay_octads()) {
    if ((o & pq) != pq) continue;
    std::array<int, 6> block{};
    int k = 0;
    for (int i = 0; i < 22; ++i)
      if ((o >> i) & 1u) block[k++] = i;
    s.blocks.push_back(block);
  }
  std::sort(s.blocks.begin(), s.blocks.end());
  if (s.blocks.size() != 77) throw InvariantError("expected 77 hexads, found " + std::to_string(s.blocks.size()));
  return s;
}

Graph mesner() { return checked("mesner", graph_on(steiner_3_6_22().blocks, disjoint)); }

Graph gewirtz() {
  constexpr int avoided = 21;
  std::vector<std::array<int, 6>> blocks;
  for (const auto& b : steiner_3_6_22().blocks)
    if (std::find(b.begin(), b.end(), avoided) == b.end()) blocks.push_back(b);
  return checked("gewirtz", graph_on(blocks, disjoint));
}

Graph higman_sims() {
  const SteinerSystem s = steiner_3_6_22();
  constexpr int apex = 0, first_point = 1, first_block = 23;
  std::vector<Edge> edges;
  for (int x = 0; x < s.points; ++x) edges.push_back({apex, first_point + x});
  const int nb = static_cast<int>(s.blocks.size());
  for (int b = 0; b < nb; ++b) {
    for (int x : s.blocks[b]) edges.push_back({first_point + x, first_block + b});
    for (int c = b + 1; c < nb; ++c)
      if (disjoint(s.blocks[b], s.blocks[c])) edges.push_back({first_block + b, first_block + c});
  }
  return checked("higman-sims", build_graph(first_block + nb, edges));
}

const std::vector<std::string>& named_graphs() {
  static const std::vector<std::string> names{"pentagon", "petersen", "clebsch", "hoffman-singleton",
                                              "gewirtz",  "mesner",   "higman-sims"};
  return names;
}

SrgParams expected_parameters(std::string_view name) {
  if (name == "pentagon") return {5, 2, 0, 1};
  if (name == "petersen") return {10, 3, 0, 1};
  if (name == "clebsch") return {16, 5, 0, 2};
  if (name == "hoffman-singleton") return {50, 7, 0, 1};
  if (name == "gewirtz") return {56, 10, 0, 2};
  if (name == "mesner") return {77, 16, 0, 4};
  if (name == "higman-sims") return {100, 22, 0, 6};
  throw DomainError("no expected parameters for graph '" + std::string(name) + "'");
}

std::optional<Graph> graph_by_name(std::string_view name) {
  if (name == "pentagon") return pentagon();
  if (name == "petersen") return petersen();
  if (name == "clebsch") return clebsch();
  if (name == "hoffman-singleton") return hoffman_singleton();
  if (name == "gewirtz") return gewirtz();
  if (name == "mesner") return mesner();
  if (name == "higman-sims") return higman_sims();
  constexpr std::string_view prefix = "trapezohedral:";
  if (name.starts_with(prefix)) {
    auto digits = name.substr(prefix.size());
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
    return trapezohedral(n);
  }
  return std::nullopt;
}

}  // namespace srgq
