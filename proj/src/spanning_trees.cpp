#include "ecindex/spanning_trees.hpp"

#include <numeric>

#include "ecindex/error.hpp"

namespace ecindex {
namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

class Walker {
 public:
  Walker(const Graph& g, std::size_t limit,
         const std::function<bool(const Graph&)>& visit)
      : g_(g), edges_(g.edges()), limit_(limit), visit_(visit) {}

  SpanningTreeWalk run() {
    std::vector<Edge> chosen;
    recurse(0, DisjointSets(g_.order()), chosen);
    return result_;
  }

 private:
  bool done() const { return result_.truncated || result_.stopped; }

  // Can chosen + edges_[from..] still connect every vertex?
  bool spannable(std::size_t from, const DisjointSets& base) const {
    DisjointSets sets = base;
    int components = 0;
    for (int v = 0; v < g_.order(); ++v) {
      if (sets.find(v) == v) ++components;
    }
    for (std::size_t i = from; i < edges_.size() && components > 1; ++i) {
      if (sets.unite(edges_[i].u, edges_[i].v)) --components;
    }
    return components == 1;
  }

  void recurse(std::size_t i, DisjointSets sets, std::vector<Edge>& chosen) {
    if (done()) return;
    if (chosen.size() + 1 == static_cast<std::size_t>(g_.order())) {
      if (result_.visited == limit_) {
        result_.truncated = true;
        return;
      }
      ++result_.visited;
      if (!visit_(Graph(g_.order(), chosen))) result_.stopped = true;
      return;
    }
    if (i == edges_.size()) return;

    const Edge e = edges_[i];
    // Contract e.
    DisjointSets with = sets;
    if (with.unite(e.u, e.v)) {
      chosen.push_back(e);
      recurse(i + 1, with, chosen);
      chosen.pop_back();
    }
    // Delete e.
    if (spannable(i + 1, sets)) recurse(i + 1, std::move(sets), chosen);
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  std::size_t limit_;
  const std::function<bool(const Graph&)>& visit_;
  SpanningTreeWalk result_;
};

}  // namespace

SpanningTreeWalk for_each_spanning_tree(
    const Graph& g, std::size_t limit,
    const std::function<bool(const Graph&)>& visit) {
  if (!is_connected(g)) {
    throw DomainError("spanning tree enumeration requires a connected graph");
  }
  return Walker(g, limit, visit).run();
}

SpanningTrees spanning_trees(const Graph& g, std::size_t limit) {
  SpanningTrees out;
  const auto walk = for_each_spanning_tree(g, limit, [&](const Graph& t) {
    out.trees.push_back(t);
    return true;
  });
  out.truncated = walk.truncated;
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return "true";
    case Verdict::kFalse:
      return "false";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

Verdict all_spanning_trees_caterpillar_of_diameter(const Graph& g, int d,
                                                   std::size_t limit) {
  bool counterexample = false;
  const auto walk = for_each_spanning_tree(g, limit, [&](const Graph& t) {
    if (!is_caterpillar(t) || profile(t).diameter != d) {
      counterexample = true;
      return false;
    }
    return true;
  });
  if (counterexample) return Verdict::kFalse;
  return walk.truncated ? Verdict::kInconclusive : Verdict::kTrue;
}

}  // namespace ecindex
