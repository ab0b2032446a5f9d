#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecindex/graph.hpp"
#include "ecindex/indices.hpp"

namespace ecindex {

inline constexpr int kMaxSweepGraphOrder = 8;
inline constexpr int kMaxSweepTreeOrder = 10;

// Calls `visit` for every connected graph on n labeled vertices (edge
// subsets in increasing upper-triangle mask order), or for one
// representative per isomorphism class when `dedup` is set. Requires
// 2 <= n <= 8 (CapacityError otherwise).
void for_each_connected_graph(int n, bool dedup,
                              const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_connected_graphs(int n, bool dedup);

// One representative per free-tree class, in canonical form, sorted by
// certificate. Generated from rooted level sequences. Requires 2 <= n <= 10.
std::vector<Graph> enumerate_trees(int n);

// Labeled tree with Prüfer sequence `sequence` on sequence.size() + 2
// vertices.
Graph decode_prufer(std::span<const int> sequence);

// Free trees by decoding all n^(n-2) Prüfer sequences and deduplicating by
// canonical form. Exponentially slower than enumerate_trees; n <= 8.
std::vector<Graph> enumerate_trees_prufer(int n);

struct DiameterRange {
  int min = 2;
  int max = 2;
  bool contains(int d) const { return min <= d && d <= max; }
};

struct SweepConfig {
  int order = 2;
  // Diameters to check; default every d >= 2.
  std::optional<DiameterRange> diameter;
  // Count isomorphism classes as well as labeled graphs.
  bool dedup = false;
  bool trees_only = false;
  int worker_count = 1;
  // Equality witnesses are written here as graph6 lines.
  std::optional<std::string> graph6_output;
  // Called with the completed fraction of the sweep.
  std::function<void(double)> progress;
};

// Sweep results for one (n, d) pair. Graph lists hold canonical graph6
// certificates, sorted.
struct BucketReport {
  int order = 0;
  int diameter = 0;
  // Labeled graphs for general sweeps, classes for tree sweeps.
  std::uint64_t graphs_checked = 0;
  std::optional<std::uint64_t> isomorphism_classes;
  EciValue min_eci;
  EciValue volcano_eci;
  std::vector<std::string> violations;
  std::vector<std::string> equality_witnesses;
  bool equality_all_volcano = false;
  // The bound is asserted for d >= 3; d = 2 is report-only.
  bool asserted = false;

  bool holds() const { return min_eci >= volcano_eci; }
  friend bool operator==(const BucketReport&, const BucketReport&) = default;
};

struct VerificationReport {
  int order = 0;
  bool trees_only = false;
  bool dedup = false;
  std::vector<BucketReport> buckets;  // ascending diameter

  // No violation in any asserted bucket.
  bool passed() const;
};

// Parallel sweep (OpenMP, config.worker_count threads): the mask space is
// cut into contiguous chunks, each reduced independently on bitset
// adjacency, then merged by min/sum/union.
VerificationReport verify_bound(const SweepConfig& config);

// Single-threaded reference built on Graph, profile() and eci(). Produces
// a report identical to verify_bound.
VerificationReport verify_bound_reference(const SweepConfig& config);

struct CensusEntry {
  int order = 0;
  int diameter = 0;
  std::vector<std::string> witnesses;
  bool all_volcano = false;
};

// Isomorphism classes attaining the volcano index, per diameter.
std::vector<CensusEntry> equality_census(const SweepConfig& config);
std::vector<CensusEntry> equality_census(const VerificationReport& report);

// Canonical certificates of every volcano V_{n,d} split variant.
std::vector<std::string> volcano_certificates(int n, int d);

}  // namespace ecindex
