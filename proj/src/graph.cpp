#include "ecindex/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ecindex/error.hpp"

namespace ecindex {

Graph::Graph(int order) {
  if (order < 1) {
    throw InputError("graph order must be positive, got " + std::to_string(order));
  }
  adjacency_.resize(static_cast<std::size_t>(order));
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) {
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw InputError("duplicate edge");
    }
  }
  edge_count_ = edges.size();
}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order()));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adjacency_[v].size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool DiametralPath::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<Vertex> DiametralPath::center() const {
  const int d = length();
  if (d % 2 == 0) return {vertices[d / 2]};
  return {vertices[(d - 1) / 2], vertices[(d + 1) / 2]};
}

namespace {

// BFS with ascending neighbor expansion; fills distances and parents.
void bfs(const Graph& g, Vertex source, std::vector<int>& dist,
         std::vector<Vertex>& parent) {
  dist.assign(g.order(), kUnreachable);
  parent.assign(g.order(), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push(w);
      }
    }
  }
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw DomainError(std::string(what) + " requires a connected graph");
  }
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.order()) {
    throw InputError("BFS source " + std::to_string(source) + " out of range");
  }
  std::vector<int> dist;
  std::vector<Vertex> parent;
  bfs(g, source, dist, parent);
  return dist;
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int x) { return x == kUnreachable; });
}

bool is_tree(const Graph& g) {
  return g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

EccentricityProfile profile(const Graph& g) {
  require_connected(g, "eccentricity profile");
  EccentricityProfile p;
  const int n = g.order();
  p.eccentricity.resize(n);
  p.degree.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    p.eccentricity[v] = *std::max_element(dist.begin(), dist.end());
    p.degree[v] = g.degree(v);
  }
  p.diameter = *std::max_element(p.eccentricity.begin(), p.eccentricity.end());
  p.radius = *std::min_element(p.eccentricity.begin(), p.eccentricity.end());
  for (Vertex v = 0; v < n; ++v) {
    if (p.eccentricity[v] == p.radius) p.center.push_back(v);
  }
  return p;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to) {
  if (to < 0 || to >= g.order()) {
    throw InputError("path target " + std::to_string(to) + " out of range");
  }
  std::vector<int> dist;
  std::vector<Vertex> parent;
  bfs_distances(g, from);  // range check on `from`
  bfs(g, from, dist, parent);
  if (dist[to] == kUnreachable) return {};
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

DiametralPath find_diametral_path(const Graph& g) {
  return find_diametral_path(g, profile(g));
}

DiametralPath find_diametral_path(const Graph& g, const EccentricityProfile& p) {
  const int n = g.order();
  for (Vertex s = 0; s < n; ++s) {
    if (p.eccentricity[s] != p.diameter) continue;
    const auto dist = bfs_distances(g, s);
    for (Vertex t = s + 1; t < n; ++t) {
      if (dist[t] == p.diameter) return {shortest_path(g, s, t)};
    }
  }
  // Single vertex: diameter 0, the path is the vertex itself.
  return {{0}};
}

bool is_caterpillar(const Graph& g) {
  if (!is_tree(g)) throw DomainError("caterpillar test requires a tree");
  std::vector<Vertex> spine;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 1) spine.push_back(v);
  }
  if (spine.size() <= 1) return true;
  // The non-leaves of a tree induce a subtree; it is a path iff no vertex
  // has three or more non-leaf neighbors.
  for (Vertex v : spine) {
    int inner = 0;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) > 1) ++inner;
    }
    if (inner > 2) return false;
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= g.order() || index[v] != -1) {
      throw InputError("induced subgraph needs distinct in-range vertices");
    }
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      const int j = index[w];
      if (j > static_cast<int>(i)) edges.push_back({static_cast<Vertex>(i), j});
    }
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) {
    throw InputError("permutation size does not match graph order");
  }
  std::vector<bool> seen(perm.size(), false);
  for (Vertex v : perm) {
    if (v < 0 || v >= g.order() || seen[v]) throw InputError("not a permutation");
    seen[v] = true;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = perm[e.u];
    const Vertex b = perm[e.v];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.order(), edges);
}

std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Vertex>> blocks;
  int timer = 0;

  // Iterative Tarjan: frame = (vertex, parent, next neighbor index).
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (g.degree(root) == 0) {
      blocks.push_back({root});
      disc[root] = timer++;
      continue;
    }
    std::vector<Frame> frames{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (disc[w] == -1) {
          stack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex parent = f.parent;
      frames.pop_back();
      if (parent == -1) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        std::vector<Vertex> block;
        while (true) {
          const Edge e = stack.back();
          stack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e.u == parent && e.v == v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

}  // namespace ecindex
