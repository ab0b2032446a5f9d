#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecindex/graph.hpp"
#include "ecindex/indices.hpp"

namespace ecindex {

// Smallest eccentricity any vertex can have in a graph of diameter d.
constexpr int central_eccentricity(int d) { return (d + 1) / 2; }

// Off-path vertex whose eccentricity is ceil(d/2), and how it is explained:
// by lying on another v0-vd geodesic or, for odd d only, by being adjacent
// to both centers of the fixed path.
struct Lemma1Finding {
  Vertex vertex = 0;
  int eccentricity = 0;
  bool on_geodesic = false;
  bool adjacent_to_both_centers = false;
  bool passed = false;
  // v0 .. vertex .. vd when on_geodesic.
  std::vector<Vertex> witness;
};

struct Lemma1Report {
  DiametralPath path;
  int diameter = 0;
  std::vector<Lemma1Finding> findings;

  bool passed() const;
};

// Throws InputError unless `path` is a diametral geodesic of the connected
// graph `g`.
Lemma1Report check_lemma1(const Graph& g, const DiametralPath& path);

struct Lemma2Report {
  int diameter = 0;
  // Vertices with eccentricity ceil(d/2).
  std::vector<Vertex> central;
  // Central vertices of degree below two. Expected empty.
  std::vector<Vertex> violations;

  bool passed() const { return violations.empty(); }
};

// Requires a connected graph of diameter >= 2.
Lemma2Report check_lemma2(const Graph& g);

enum class VertexClass {
  kPathCentral,             // on the path, eccentricity ceil(d/2)
  kPathNoncentral,          // on the path, eccentricity above ceil(d/2)
  kOffCentralAdjacent,      // off the path, central, adjacent to C(path)
  kOffCentralNonadjacent,   // off the path, central, not adjacent to C(path)
  kOffNoncentralAdjacent,   // off the path, non-central, adjacent to C(path)
  kOffNoncentralNonadjacent,
};

const char* to_string(VertexClass c);

struct PartitionCounts {
  int n1 = 0;   // off-path central
  int n2 = 0;   // off-path non-central
  int n11 = 0;
  int n12 = 0;
  int n21 = 0;
  int n22 = 0;

  friend bool operator==(const PartitionCounts&, const PartitionCounts&) = default;
};

struct DiametralPartition {
  DiametralPath path;
  int order = 0;
  int diameter = 0;
  std::vector<VertexClass> classes;
  PartitionCounts counts;
};

DiametralPartition partition(const Graph& g, const DiametralPath& path);

// First inequality of the parity-split counting argument, evaluated on the
// partition counters:
//   even d: 3d^2/2 + n21 d/2 + (2 n1 + n22)(d/2 + 1) + n1 d
//           + n21 (d/2 + 1) + n22 (d/2 + 1)
//   odd d:  3d^2/2 + 1/2 + (2 n11 + n21)(d + 1)/2 + (2 n12 + n22)(d + 3)/2
//           + n1 d + n21 (d + 3)/2 + n22 (d + 3)/2
// It never falls below the volcano index of the same order and diameter
// (checked; a failure throws std::logic_error). Requires d >= 3.
EciValue partition_lower_bound(const DiametralPartition& p);

struct ChainStep {
  int step_index = 0;
  std::optional<Vertex> added_vertex;
  int subgraph_order = 0;
  int subgraph_diameter = 0;
  EciValue subgraph_eci;
  // Volcano index for (subgraph_order, d) with d the diameter of the host.
  EciValue volcano_reference;
  // eci(G_i) - eci(G_{i-1}); zero for the first step.
  std::int64_t delta = 0;
};

// G_0 is the subgraph induced by the fixed diametral path. Each later step
// adds the lowest-index vertex adjacent to the current vertex set and
// recomputes the induced subgraph's index from scratch. Requires a
// connected graph with diameter >= 2.
std::vector<ChainStep> build_chain(const Graph& g);

struct ChainCheck {
  int diameter = 0;
  // ceil(d/2) + ceil(d/2) + 1, the per-step contribution floor.
  std::int64_t step_floor = 0;
  std::int64_t volcano_increment = 0;
  // Steps whose delta is below the floor (diagnostic only).
  std::vector<int> floor_failures;
  // Steps whose delta differs from the volcano increment.
  std::vector<int> increment_mismatches;
  // The final inequality eci(G) >= volcano(n, d) is asserted for d >= 3.
  bool final_asserted = false;
  bool final_holds = false;

  bool ok() const { return !final_asserted || final_holds; }
};

ChainCheck check_chain_deltas(const std::vector<ChainStep>& chain, int d);

}  // namespace ecindex
