#include "ecindex/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ecindex/error.hpp"

namespace ecindex {
namespace {

void require_diametral(const Graph& g, const DiametralPath& path, int diameter) {
  const auto& vs = path.vertices;
  if (vs.empty()) throw InputError("empty diametral path");
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order() || seen[v]) {
      throw InputError("diametral path must list distinct in-range vertices");
    }
    seen[v] = true;
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.adjacent(vs[i], vs[i + 1])) throw InputError("path skips a non-edge");
  }
  if (path.length() != diameter ||
      bfs_distances(g, path.front())[path.back()] != diameter) {
    throw InputError("path is not a diametral geodesic");
  }
}

}  // namespace

bool Lemma1Report::passed() const {
  return std::all_of(findings.begin(), findings.end(),
                     [](const Lemma1Finding& f) { return f.passed; });
}

Lemma1Report check_lemma1(const Graph& g, const DiametralPath& path) {
  const auto p = profile(g);
  require_diametral(g, path, p.diameter);
  const int d = p.diameter;
  const auto from_start = bfs_distances(g, path.front());
  const auto from_end = bfs_distances(g, path.back());
  const auto centers = path.center();

  Lemma1Report report{path, d, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (path.contains(v) || p.eccentricity[v] != central_eccentricity(d)) continue;
    Lemma1Finding f;
    f.vertex = v;
    f.eccentricity = p.eccentricity[v];
    f.on_geodesic = from_start[v] + from_end[v] == d;
    f.adjacent_to_both_centers =
        centers.size() == 2 && g.adjacent(v, centers[0]) && g.adjacent(v, centers[1]);
    f.passed = f.on_geodesic || (d % 2 == 1 && f.adjacent_to_both_centers);
    if (f.on_geodesic) {
      f.witness = shortest_path(g, path.front(), v);
      const auto tail = shortest_path(g, v, path.back());
      f.witness.insert(f.witness.end(), tail.begin() + 1, tail.end());
    }
    report.findings.push_back(std::move(f));
  }
  return report;
}

Lemma2Report check_lemma2(const Graph& g) {
  const auto p = profile(g);
  if (p.diameter < 2) throw InputError("lemma 2 check needs diameter >= 2");
  Lemma2Report report;
  report.diameter = p.diameter;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (p.eccentricity[v] != central_eccentricity(p.diameter)) continue;
    report.central.push_back(v);
    if (p.degree[v] < 2) report.violations.push_back(v);
  }
  return report;
}

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::kPathCentral:
      return "P_c";
    case VertexClass::kPathNoncentral:
      return "P_c'";
    case VertexClass::kOffCentralAdjacent:
      return "P'_cc";
    case VertexClass::kOffCentralNonadjacent:
      return "P'_cc'";
    case VertexClass::kOffNoncentralAdjacent:
      return "P'_c'c";
    case VertexClass::kOffNoncentralNonadjacent:
      return "P'_c'c'";
  }
  return "?";
}

DiametralPartition partition(const Graph& g, const DiametralPath& path) {
  const auto p = profile(g);
  require_diametral(g, path, p.diameter);
  const int d = p.diameter;
  const int central = central_eccentricity(d);
  const auto centers = path.center();

  DiametralPartition out{path, g.order(), d, {}, {}};
  out.classes.resize(g.order());
  auto& c = out.counts;
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool is_central = p.eccentricity[v] == central;
    if (path.contains(v)) {
      out.classes[v] = is_central ? VertexClass::kPathCentral : VertexClass::kPathNoncentral;
      continue;
    }
    const bool adjacent = std::any_of(centers.begin(), centers.end(),
                                      [&](Vertex w) { return g.adjacent(v, w); });
    if (is_central) {
      ++c.n1;
      ++(adjacent ? c.n11 : c.n12);
      out.classes[v] = adjacent ? VertexClass::kOffCentralAdjacent
                                : VertexClass::kOffCentralNonadjacent;
    } else {
      ++c.n2;
      ++(adjacent ? c.n21 : c.n22);
      out.classes[v] = adjacent ? VertexClass::kOffNoncentralAdjacent
                                : VertexClass::kOffNoncentralNonadjacent;
    }
  }
  return out;
}

EciValue partition_lower_bound(const DiametralPartition& p) {
  const std::int64_t d = p.diameter;
  if (d < 3) throw InputError("partition bound needs diameter >= 3");
  const auto& c = p.counts;
  // Everything is doubled so that the half terms stay integral.
  std::int64_t twice = 0;
  if (d % 2 == 0) {
    twice = 3 * d * d + c.n21 * d + (2 * c.n1 + c.n22) * (d + 2) + 2 * c.n1 * d +
            c.n21 * (d + 2) + c.n22 * (d + 2);
  } else {
    twice = 3 * d * d + 1 + (2 * c.n11 + c.n21) * (d + 1) +
            (2 * c.n12 + c.n22) * (d + 3) + 2 * c.n1 * d + c.n21 * (d + 3) +
            c.n22 * (d + 3);
  }
  const EciValue bound{static_cast<std::uint64_t>(twice / 2)};
  if (bound < eci_volcano_closed_form(p.order, d)) {
    throw std::logic_error("partition bound fell below the volcano index");
  }
  return bound;
}

std::vector<ChainStep> build_chain(const Graph& g) {
  const auto p = profile(g);
  const int d = p.diameter;
  if (d < 2) throw InputError("chain construction needs diameter >= 2");
  const auto path = find_diametral_path(g, p);

  std::vector<Vertex> members = path.vertices;
  std::vector<bool> inside(g.order(), false);
  for (Vertex v : members) inside[v] = true;

  std::vector<ChainStep> chain;
  auto record = [&](std::optional<Vertex> added) {
    const Graph sub = induced_subgraph(g, members);
    const auto sp = profile(sub);
    ChainStep step;
    step.step_index = static_cast<int>(chain.size());
    step.added_vertex = added;
    step.subgraph_order = sub.order();
    step.subgraph_diameter = sp.diameter;
    step.subgraph_eci = eci(sp);
    step.volcano_reference = eci_volcano_closed_form(sub.order(), d);
    step.delta = chain.empty() ? 0
                               : static_cast<std::int64_t>(step.subgraph_eci.value) -
                                     static_cast<std::int64_t>(chain.back().subgraph_eci.value);
    chain.push_back(step);
  };

  record(std::nullopt);
  while (static_cast<int>(members.size()) < g.order()) {
    Vertex next = -1;
    for (Vertex v = 0; v < g.order() && next == -1; ++v) {
      if (inside[v]) continue;
      for (Vertex w : g.neighbors(v)) {
        if (inside[w]) {
          next = v;
          break;
        }
      }
    }
    inside[next] = true;
    members.push_back(next);
    record(next);
  }
  return chain;
}

ChainCheck check_chain_deltas(const std::vector<ChainStep>& chain, int d) {
  if (chain.empty()) throw InputError("empty chain");
  ChainCheck check;
  check.diameter = d;
  check.step_floor = 2 * static_cast<std::int64_t>(central_eccentricity(d)) + 1;
  check.volcano_increment = volcano_increment(d);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i].delta < check.step_floor) check.floor_failures.push_back(static_cast<int>(i));
    if (chain[i].delta != check.volcano_increment) {
      check.increment_mismatches.push_back(static_cast<int>(i));
    }
  }
  const ChainStep& last = chain.back();
  check.final_asserted = d >= 3;
  check.final_holds = last.subgraph_eci >= eci_volcano_closed_form(last.subgraph_order, d);
  return check;
}

}  // namespace ecindex
