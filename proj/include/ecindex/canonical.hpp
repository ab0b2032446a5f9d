#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecindex/graph.hpp"
#include "ecindex/small_graph.hpp"

namespace ecindex {

inline constexpr int kDefaultCanonicalCap = 10;
// The search packs the upper triangle into 64 bits.
inline constexpr int kMaxCanonicalCap = 11;

// Isomorphism-class certificate: the graph6 string of the canonically
// relabeled graph. Equal certificates iff isomorphic graphs.
struct CanonicalForm {
  std::string certificate;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Canonical labeling of a small graph: `labeling[v]` is the new index of v
// and `key` packs the relabeled upper triangle, pair k at bit 63 - k. The
// key is the minimum over every labeling that respects the color-refined
// vertex partition.
struct CanonicalLabeling {
  std::vector<Vertex> labeling;
  std::uint64_t key = 0;
};

CanonicalLabeling canonical_labeling(const SmallGraph& g);

// Throws CapacityError when g.order() exceeds `cap` (itself capped at
// kMaxCanonicalCap).
CanonicalForm canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

// The graph relabeled into canonical order.
Graph canonical_graph(const Graph& g, int cap = kDefaultCanonicalCap);

// Graph with `n` vertices decoded from a canonical key.
Graph graph_from_key(int n, std::uint64_t key);

}  // namespace ecindex
