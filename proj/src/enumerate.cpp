#include "ecindex/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <limits>
#include <set>
#include <unordered_set>

#include "ecindex/canonical.hpp"
#include "ecindex/error.hpp"
#include "ecindex/families.hpp"
#include "ecindex/io.hpp"
#include "ecindex/small_graph.hpp"

namespace ecindex {
namespace {

void require_graph_order(int n) {
  if (n < 2 || n > kMaxSweepGraphOrder) {
    throw CapacityError("graph enumeration supports 2 <= n <= " +
                        std::to_string(kMaxSweepGraphOrder) + ", got " +
                        std::to_string(n));
  }
}

void require_tree_order(int n) {
  if (n < 2 || n > kMaxSweepTreeOrder) {
    throw CapacityError("tree enumeration supports 2 <= n <= " +
                        std::to_string(kMaxSweepTreeOrder) + ", got " +
                        std::to_string(n));
  }
}

std::string certificate(int n, std::uint64_t key) {
  return encode_graph6(graph_from_key(n, key));
}

DiameterRange effective_range(const SweepConfig& c) {
  if (!c.diameter) return {2, std::numeric_limits<int>::max()};
  if (c.diameter->min < 2 || c.diameter->max < c.diameter->min) {
    throw InputError("diameter filter must be a non-empty range within d >= 2");
  }
  return *c.diameter;
}

void validate(const SweepConfig& c) {
  if (c.trees_only) {
    require_tree_order(c.order);
  } else {
    require_graph_order(c.order);
  }
  if (c.worker_count < 1) throw InputError("worker count must be positive");
  effective_range(c);
}

// Per-diameter accumulator shared by both sweep implementations.
struct Bucket {
  std::uint64_t graphs = 0;
  std::uint64_t min_eci = std::numeric_limits<std::uint64_t>::max();
  std::unordered_set<std::uint64_t> classes;
  std::set<std::uint64_t> equality;
  std::set<std::uint64_t> violations;

  void merge(const Bucket& other) {
    graphs += other.graphs;
    min_eci = std::min(min_eci, other.min_eci);
    classes.insert(other.classes.begin(), other.classes.end());
    equality.insert(other.equality.begin(), other.equality.end());
    violations.insert(other.violations.begin(), other.violations.end());
  }
};

using Buckets = std::array<Bucket, kSmallGraphMaxOrder + 1>;

std::array<std::uint64_t, kSmallGraphMaxOrder + 1> volcano_table(int n) {
  std::array<std::uint64_t, kSmallGraphMaxOrder + 1> table{};
  for (int d = 2; d <= n - 1; ++d) table[d] = eci_volcano_closed_form(n, d).value;
  return table;
}

struct Accumulator {
  Accumulator(int n, DiameterRange range, bool track_classes)
      : n(n), range(range), track_classes(track_classes), volcano(volcano_table(n)) {}

  void add(const SmallGraph& g) {
    std::uint64_t sum = 0;
    int d = 0;
    for (int v = 0; v < n; ++v) {
      const int e = g.eccentricity(v);
      if (e < 0) return;
      d = std::max(d, e);
      sum += static_cast<std::uint64_t>(e) * static_cast<std::uint64_t>(g.degree(v));
    }
    if (!range.contains(d)) return;
    Bucket& b = buckets[d];
    ++b.graphs;
    b.min_eci = std::min(b.min_eci, sum);
    const bool equal = sum == volcano[d];
    const bool below = sum < volcano[d];
    if (!track_classes && !equal && !below) return;
    const std::uint64_t key = canonical_labeling(g).key;
    if (track_classes) b.classes.insert(key);
    if (equal) b.equality.insert(key);
    if (below) b.violations.insert(key);
  }

  int n;
  DiameterRange range;
  bool track_classes;
  std::array<std::uint64_t, kSmallGraphMaxOrder + 1> volcano;
  Buckets buckets;
};

std::vector<std::string> to_certificates(int n, const std::set<std::uint64_t>& keys) {
  std::vector<std::string> out;
  out.reserve(keys.size());
  for (std::uint64_t k : keys) out.push_back(certificate(n, k));
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport finish(const SweepConfig& config, const Buckets& buckets) {
  VerificationReport report;
  report.order = config.order;
  report.trees_only = config.trees_only;
  report.dedup = config.dedup;
  const bool classes = config.dedup || config.trees_only;
  for (int d = 2; d <= kSmallGraphMaxOrder; ++d) {
    const Bucket& b = buckets[d];
    if (b.graphs == 0) continue;
    BucketReport r;
    r.order = config.order;
    r.diameter = d;
    r.graphs_checked = b.graphs;
    if (classes) r.isomorphism_classes = b.classes.size();
    r.min_eci = {b.min_eci};
    r.volcano_eci = eci_volcano_closed_form(config.order, d);
    r.violations = to_certificates(config.order, b.violations);
    r.equality_witnesses = to_certificates(config.order, b.equality);
    const auto volcanos = volcano_certificates(config.order, d);
    r.equality_all_volcano =
        !r.equality_witnesses.empty() &&
        std::all_of(r.equality_witnesses.begin(), r.equality_witnesses.end(),
                    [&](const std::string& w) {
                      return std::binary_search(volcanos.begin(), volcanos.end(), w);
                    });
    r.asserted = d >= 3;
    report.buckets.push_back(std::move(r));
  }
  if (config.graph6_output) {
    std::ofstream out(*config.graph6_output);
    if (!out) throw InputError("cannot open witness file " + *config.graph6_output);
    for (const auto& b : report.buckets) {
      for (const auto& w : b.equality_witnesses) out << w << '\n';
    }
  }
  return report;
}

std::vector<SmallGraph> small_trees(int n) {
  std::vector<SmallGraph> out;
  for (const Graph& t : enumerate_trees(n)) out.push_back(SmallGraph::from_graph(t));
  return out;
}

}  // namespace

void for_each_connected_graph(int n, bool dedup,
                              const std::function<void(const Graph&)>& visit) {
  require_graph_order(n);
  const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    const SmallGraph g = SmallGraph::from_mask(n, mask);
    if (!g.connected()) continue;
    if (!dedup) {
      visit(g.to_graph());
      continue;
    }
    const std::uint64_t key = canonical_labeling(g).key;
    if (seen.insert(key).second) visit(graph_from_key(n, key));
  }
}

std::vector<Graph> enumerate_connected_graphs(int n, bool dedup) {
  std::vector<Graph> out;
  for_each_connected_graph(n, dedup, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_trees(int n) {
  require_tree_order(n);
  // Canonical level sequences of rooted trees, root at level 0.
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i;
  std::set<std::uint64_t> keys;
  while (true) {
    SmallGraph t;
    t.n = n;
    for (int i = 1; i < n; ++i) {
      int parent = i - 1;
      while (level[parent] != level[i] - 1) --parent;
      t.add_edge(parent, i);
    }
    keys.insert(canonical_labeling(t).key);

    int p = n - 1;
    while (p > 0 && level[p] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  std::vector<std::pair<std::string, Graph>> trees;
  for (std::uint64_t k : keys) trees.emplace_back(certificate(n, k), graph_from_key(n, k));
  std::sort(trees.begin(), trees.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [cert, g] : trees) out.push_back(std::move(g));
  return out;
}

Graph decode_prufer(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw InputError("Prüfer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  for (int x : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    --degree[leaf];
    --degree[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      edges.push_back({u, v});
      break;
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> enumerate_trees_prufer(int n) {
  if (n < 2 || n > 8) throw CapacityError("Prüfer enumeration supports 2 <= n <= 8");
  std::vector<int> seq(n - 2, 0);
  std::set<std::uint64_t> keys;
  while (true) {
    keys.insert(canonical_labeling(SmallGraph::from_graph(decode_prufer(seq))).key);
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  std::vector<Graph> out;
  for (std::uint64_t k : keys) out.push_back(graph_from_key(n, k));
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(buckets.begin(), buckets.end(), [](const BucketReport& b) {
    return !b.asserted || b.violations.empty();
  });
}

VerificationReport verify_bound(const SweepConfig& config) {
  validate(config);
  const int n = config.order;
  const DiameterRange range = effective_range(config);
  const bool track_classes = config.dedup || config.trees_only;

  std::vector<SmallGraph> trees;
  std::uint64_t items = 0;
  if (config.trees_only) {
    trees = small_trees(n);
    items = trees.size();
  } else {
    items = std::uint64_t{1} << pair_count(n);
  }

  const std::int64_t chunk_size = config.trees_only ? 1 : 4096;
  const auto chunks = static_cast<std::int64_t>((items + chunk_size - 1) / chunk_size);
  std::vector<Buckets> partial(static_cast<std::size_t>(config.worker_count));
  std::atomic<std::int64_t> done{0};

#pragma omp parallel num_threads(config.worker_count)
  {
    Accumulator acc(n, range, track_classes);
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const auto begin = static_cast<std::uint64_t>(c * chunk_size);
      const std::uint64_t end = std::min(items, begin + chunk_size);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (config.trees_only) {
          acc.add(trees[i]);
        } else {
          acc.add(SmallGraph::from_mask(n, i));
        }
      }
      const std::int64_t finished = ++done;
      if (config.progress && (finished % 64 == 0 || finished == chunks)) {
#pragma omp critical(ecindex_progress)
        config.progress(static_cast<double>(finished) / static_cast<double>(chunks));
      }
    }
    partial[omp_get_thread_num()] = std::move(acc.buckets);
  }

  Buckets merged;
  for (const Buckets& p : partial) {
    for (std::size_t d = 0; d < merged.size(); ++d) merged[d].merge(p[d]);
  }
  return finish(config, merged);
}

VerificationReport verify_bound_reference(const SweepConfig& config) {
  validate(config);
  const int n = config.order;
  const DiameterRange range = effective_range(config);
  const bool track_classes = config.dedup || config.trees_only;

  std::array<std::uint64_t, kSmallGraphMaxOrder + 1> min_eci;
  min_eci.fill(std::numeric_limits<std::uint64_t>::max());
  std::array<std::uint64_t, kSmallGraphMaxOrder + 1> count{};
  std::array<std::set<std::string>, kSmallGraphMaxOrder + 1> classes, equal, below;

  auto check = [&](const Graph& g) {
    const auto p = profile(g);
    const int d = p.diameter;
    if (!range.contains(d)) return;
    const EciValue value = eci(p);
    const EciValue bound = eci_volcano_closed_form(n, d);
    ++count[d];
    min_eci[d] = std::min(min_eci[d], value.value);
    const std::string cert = canonical_form(g).certificate;
    if (track_classes) classes[d].insert(cert);
    if (value == bound) equal[d].insert(cert);
    if (value < bound) below[d].insert(cert);
  };
  if (config.trees_only) {
    for (const Graph& t : enumerate_trees(n)) check(t);
  } else {
    for_each_connected_graph(n, false, check);
  }

  VerificationReport report;
  report.order = n;
  report.trees_only = config.trees_only;
  report.dedup = config.dedup;
  for (int d = 2; d <= kSmallGraphMaxOrder; ++d) {
    if (count[d] == 0) continue;
    BucketReport r;
    r.order = n;
    r.diameter = d;
    r.graphs_checked = count[d];
    if (track_classes) r.isomorphism_classes = classes[d].size();
    r.min_eci = {min_eci[d]};
    r.volcano_eci = eci_volcano_closed_form(n, d);
    r.violations.assign(below[d].begin(), below[d].end());
    r.equality_witnesses.assign(equal[d].begin(), equal[d].end());
    const auto volcanos = volcano_certificates(n, d);
    const std::set<std::string> volcano_set(volcanos.begin(), volcanos.end());
    r.equality_all_volcano =
        !r.equality_witnesses.empty() &&
        std::all_of(r.equality_witnesses.begin(), r.equality_witnesses.end(),
                    [&](const std::string& w) { return volcano_set.count(w) > 0; });
    r.asserted = d >= 3;
    report.buckets.push_back(std::move(r));
  }
  return report;
}

std::vector<CensusEntry> equality_census(const VerificationReport& report) {
  std::vector<CensusEntry> out;
  for (const auto& b : report.buckets) {
    out.push_back({b.order, b.diameter, b.equality_witnesses, b.equality_all_volcano});
  }
  return out;
}

std::vector<CensusEntry> equality_census(const SweepConfig& config) {
  return equality_census(verify_bound(config));
}

std::vector<std::string> volcano_certificates(int n, int d) {
  std::vector<std::string> out;
  if (d < 2 || n < d + 1) return out;
  for (const auto& split : volcano_splits(n, d)) {
    out.push_back(canonical_form(make_volcano(n, d, split), kMaxCanonicalCap).certificate);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ecindex
