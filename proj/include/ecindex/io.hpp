#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ecindex/graph.hpp"

namespace ecindex {

enum class GraphFormat { kGraph6, kEdgeList, kAuto };

// graph6: N(n) header followed by the column-order upper triangle packed
// into 6-bit groups, each offset by 63. No trailing newline.
std::string encode_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" prefix. Rejects characters outside
// 63..126, wrong lengths and nonzero padding bits.
Graph decode_graph6(std::string_view text);

// True iff `line` is syntactically a complete graph6 string.
bool looks_like_graph6(std::string_view line);

// "n m" on the first line, then m lines "u v" (0-based).
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

// Format detection uses the first non-blank line.
Graph read_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

}  // namespace ecindex
