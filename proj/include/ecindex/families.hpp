#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecindex/graph.hpp"

namespace ecindex {

enum class Family { kPath, kVolcano, kBroom, kLollipop, kStar, kCycle };

std::string_view to_string(Family f);
// Throws InputError for unknown names.
Family parse_family(std::string_view name);

// Pendants on the lower and upper center of an odd-diameter volcano.
using VolcanoSplit = std::pair<int, int>;

struct FamilySpec {
  Family family = Family::kPath;
  int n = 2;
  int d = 0;
  std::optional<VolcanoSplit> split;
};

// Vertex numbering is deterministic: path vertices first, then the rest.

// Path 0 - 1 - ... - (n-1); n >= 2.
Graph make_path(int n);

// Spine v0..vd on vertices 0..d and n-d-1 pendants on its center. For even
// d every pendant hangs from v_{d/2}; for odd d, split (a, b) puts a
// pendants on v_{(d-1)/2} and b on v_{(d+1)/2} (default: all on the lower).
Graph make_volcano(int n, int d, std::optional<VolcanoSplit> split = std::nullopt);

// Every split (a, b) with a + b = n - d - 1; a single entry for even d.
std::vector<VolcanoSplit> volcano_splits(int n, int d);

// Path on d vertices (0..d-1) plus n-d pendants on vertex 0; diameter d.
// Requires n > d >= 3.
Graph make_broom(int n, int d);

// Path on d vertices (0..d-1), clique on the remaining n-d vertices, and
// vertex 0 joined to the whole clique; diameter d. Requires n > d >= 2.
Graph make_lollipop(int n, int d);

// K_{1,n-1} with center 0; n >= 2.
Graph make_star(int n);

// C_n; n >= 3.
Graph make_cycle(int n);

Graph make_family(const FamilySpec& spec);

}  // namespace ecindex
