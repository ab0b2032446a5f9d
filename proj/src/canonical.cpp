#include "ecindex/canonical.hpp"

#include <algorithm>
#include <string>

#include "ecindex/error.hpp"
#include "ecindex/io.hpp"

namespace ecindex {

SmallGraph SmallGraph::from_graph(const Graph& graph) {
  if (graph.order() > kSmallGraphMaxOrder) {
    throw CapacityError("small graph order above " +
                        std::to_string(kSmallGraphMaxOrder));
  }
  SmallGraph g;
  g.n = graph.order();
  for (const Edge& e : graph.edges()) g.add_edge(e.u, e.v);
  return g;
}

Graph SmallGraph::to_graph() const {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (adjacent(i, j)) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

namespace {

// Iterated degree refinement. Colors are ranks of sorted signatures, so
// the resulting ordered partition is invariant under relabeling.
std::array<int, kSmallGraphMaxOrder> refine(const SmallGraph& g) {
  std::array<int, kSmallGraphMaxOrder> color{};
  for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);

  int classes = 0;
  std::vector<std::vector<int>> signature(g.n);
  while (true) {
    for (int v = 0; v < g.n; ++v) {
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(color[v]);
      for (unsigned s = g.adj[v]; s != 0; s &= s - 1) {
        sig.push_back(color[std::countr_zero(s)]);
      }
      std::sort(sig.begin() + 1, sig.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < g.n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
          distinct.begin());
    }
    const int next = static_cast<int>(distinct.size());
    if (next == classes) break;
    classes = next;
  }
  return color;
}

class LabelingSearch {
 public:
  explicit LabelingSearch(const SmallGraph& g) : g_(g) {
    const auto color = refine(g);
    std::array<int, kSmallGraphMaxOrder> order{};
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::sort(order.begin(), order.begin() + g.n, [&](int a, int b) {
      return color[a] != color[b] ? color[a] < color[b] : a < b;
    });
    for (int p = 0; p < g.n; ++p) {
      cell_of_position_[p] = 0;
      for (int v = 0; v < g.n; ++v) {
        if (color[v] == color[order[p]]) {
          cell_of_position_[p] |= static_cast<std::uint16_t>(1U << v);
        }
      }
    }
    // Transposing twins is an automorphism, so only the lowest unused
    // member of a twin class needs to be tried at each position.
    for (int u = 0; u < g.n; ++u) {
      twins_below_[u] = 0;
      for (int w = 0; w < u; ++w) {
        const auto bu = static_cast<std::uint16_t>(1U << u);
        const auto bw = static_cast<std::uint16_t>(1U << w);
        if ((g.adj[u] & ~bw) == (g.adj[w] & ~bu)) twins_below_[u] |= bw;
      }
    }
  }

  CanonicalLabeling run() {
    search(0, 0, 0, false);
    CanonicalLabeling out;
    out.key = best_key_;
    out.labeling.assign(g_.n, 0);
    for (int p = 0; p < g_.n; ++p) out.labeling[best_[p]] = p;
    return out;
  }

 private:
  void search(int position, std::uint16_t used, std::uint64_t key, bool below) {
    if (position == g_.n) {
      if (!found_ || key < best_key_) {
        found_ = true;
        best_key_ = key;
        best_ = placed_;
      }
      return;
    }
    const std::uint16_t candidates = cell_of_position_[position] & ~used;
    for (unsigned s = candidates; s != 0; s &= s - 1) {
      const int v = std::countr_zero(s);
      if (twins_below_[v] & candidates) continue;
      std::uint64_t next = key;
      for (int q = 0; q < position; ++q) {
        if (g_.adjacent(placed_[q], v)) {
          next |= std::uint64_t{1} << (63 - pair_index(q, position));
        }
      }
      bool next_below = below;
      if (found_ && !below) {
        const int bits = pair_count(position + 1);
        const std::uint64_t mask =
            bits == 0 ? 0 : ~std::uint64_t{0} << (64 - bits);
        if ((next & mask) > (best_key_ & mask)) continue;
        next_below = (next & mask) < (best_key_ & mask);
      }
      placed_[position] = v;
      search(position + 1, static_cast<std::uint16_t>(used | (1U << v)), next,
             next_below);
    }
  }

  const SmallGraph& g_;
  std::array<std::uint16_t, kSmallGraphMaxOrder> cell_of_position_{};
  std::array<std::uint16_t, kSmallGraphMaxOrder> twins_below_{};
  std::array<int, kSmallGraphMaxOrder> placed_{};
  std::array<int, kSmallGraphMaxOrder> best_{};
  std::uint64_t best_key_ = 0;
  bool found_ = false;
};

}  // namespace

CanonicalLabeling canonical_labeling(const SmallGraph& g) {
  if (g.n > kMaxCanonicalCap) {
    throw CapacityError("canonical labeling supports at most " +
                        std::to_string(kMaxCanonicalCap) + " vertices");
  }
  return LabelingSearch(g).run();
}

Graph graph_from_key(int n, std::uint64_t key) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((key >> (63 - pair_index(i, j))) & 1U) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

Graph canonical_graph(const Graph& g, int cap) {
  cap = std::min(cap, kMaxCanonicalCap);
  if (g.order() > cap) {
    throw CapacityError("canonical form: order " + std::to_string(g.order()) +
                        " exceeds cap " + std::to_string(cap));
  }
  return graph_from_key(g.order(),
                        canonical_labeling(SmallGraph::from_graph(g)).key);
}

CanonicalForm canonical_form(const Graph& g, int cap) {
  return {encode_graph6(canonical_graph(g, cap))};
}

}  // namespace ecindex
