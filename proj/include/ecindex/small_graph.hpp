#pragma once

// Bitset adjacency for graphs of at most 16 vertices. The exhaustive sweeps
// and the canonical labeling search run on this representation; Graph is
// the general-purpose type everything else uses.

#include <array>
#include <bit>
#include <cstdint>

#include "ecindex/graph.hpp"

namespace ecindex {

inline constexpr int kSmallGraphMaxOrder = 16;

// Number of vertex pairs, i.e. bits in an upper-triangle mask.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Index of pair (i, j), i < j, in graph6 column order:
// (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) ...
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, kSmallGraphMaxOrder> adj{};

  // Bit k of `mask` (least significant first) is pair k in column order.
  static SmallGraph from_mask(int n, std::uint64_t mask) {
    SmallGraph g;
    g.n = n;
    int k = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        if ((mask >> k) & 1U) g.add_edge(i, j);
      }
    }
    return g;
  }

  static SmallGraph from_graph(const Graph& graph);
  Graph to_graph() const;

  void add_edge(int u, int v) {
    adj[u] |= static_cast<std::uint16_t>(1U << v);
    adj[v] |= static_cast<std::uint16_t>(1U << u);
  }
  bool adjacent(int u, int v) const { return (adj[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(static_cast<unsigned>(adj[v])); }
  std::uint16_t all() const { return static_cast<std::uint16_t>((1U << n) - 1); }

  // Vertices within distance one of `set`.
  std::uint16_t expand(std::uint16_t set) const {
    std::uint16_t out = set;
    for (unsigned s = set; s != 0; s &= s - 1) out |= adj[std::countr_zero(s)];
    return out;
  }

  bool connected() const {
    std::uint16_t reach = 1;
    while (true) {
      const std::uint16_t next = expand(reach);
      if (next == reach) return reach == all();
      reach = next;
    }
  }

  // Eccentricity of `v`; -1 when the graph is disconnected.
  int eccentricity(int v) const {
    std::uint16_t reach = static_cast<std::uint16_t>(1U << v);
    int steps = 0;
    while (reach != all()) {
      const std::uint16_t next = expand(reach);
      if (next == reach) return -1;
      reach = next;
      ++steps;
    }
    return steps;
  }
};

}  // namespace ecindex
