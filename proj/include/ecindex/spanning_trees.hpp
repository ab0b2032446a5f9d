#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ecindex/graph.hpp"

namespace ecindex {

struct SpanningTreeWalk {
  std::size_t visited = 0;
  // More spanning trees exist beyond the limit.
  bool truncated = false;
  // The visitor asked to stop.
  bool stopped = false;
};

// Calls `visit` once per spanning tree (as a labeled edge subset) until
// `limit` trees have been visited or `visit` returns false. Enumeration is a
// deletion/contraction recursion over the edge list. Requires a connected
// graph.
SpanningTreeWalk for_each_spanning_tree(
    const Graph& g, std::size_t limit,
    const std::function<bool(const Graph&)>& visit);

struct SpanningTrees {
  std::vector<Graph> trees;
  bool truncated = false;
};

SpanningTrees spanning_trees(const Graph& g, std::size_t limit);

enum class Verdict { kTrue, kFalse, kInconclusive };

const char* to_string(Verdict v);

// Whether every spanning tree is a caterpillar of diameter exactly `d`.
// A counterexample is conclusive even after truncation; exhausting the
// limit without one yields kInconclusive, never kTrue.
Verdict all_spanning_trees_caterpillar_of_diameter(const Graph& g, int d,
                                                   std::size_t limit);

}  // namespace ecindex
