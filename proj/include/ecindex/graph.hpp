#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ecindex {

using Vertex = int;

// Distance reported for vertices not reachable from the BFS source.
inline constexpr int kUnreachable = -1;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..order-1. Immutable once built.
// Connectivity is not enforced here; operations that need it check it.
class Graph {
 public:
  explicit Graph(int order = 1);
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edge_count_; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  // Every edge once with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct EccentricityProfile {
  std::vector<int> eccentricity;
  std::vector<int> degree;
  int diameter = 0;
  int radius = 0;
  std::vector<Vertex> center;
};

// v0 - v1 - ... - vd, a geodesic whose length is the host diameter.
struct DiametralPath {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool contains(Vertex v) const;
  // The middle vertex (even length) or the two middle vertices (odd length).
  std::vector<Vertex> center() const;
};

// Hop distances from `source`; kUnreachable marks other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Requires a connected graph; throws DomainError otherwise.
EccentricityProfile profile(const Graph& g);

// Deterministic choice: the lexicographically smallest diametral pair
// (source, target), joined through the BFS tree from `source` that expands
// neighbors in ascending order.
DiametralPath find_diametral_path(const Graph& g);
DiametralPath find_diametral_path(const Graph& g, const EccentricityProfile& p);

// Path from `from` to `to` through the ascending-order BFS tree of `from`.
// Empty when `to` is unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to);

// True iff deleting every leaf leaves a path (or at most one vertex).
// Throws DomainError when `g` is not a tree.
bool is_caterpillar(const Graph& g);

// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Old vertex v becomes new vertex perm[v]. `perm` must be a permutation.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Vertex sets of the biconnected blocks (bridges count as two-vertex blocks).
std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g);

}  // namespace ecindex
