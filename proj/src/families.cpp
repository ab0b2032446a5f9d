#include "ecindex/families.hpp"

#include <array>
#include <string>

#include "ecindex/error.hpp"

namespace ecindex {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kNames{{
    {Family::kPath, "path"},
    {Family::kVolcano, "volcano"},
    {Family::kBroom, "broom"},
    {Family::kLollipop, "lollipop"},
    {Family::kStar, "star"},
    {Family::kCycle, "cycle"},
}};

std::string params(int n, int d) {
  return "n=" + std::to_string(n) + " d=" + std::to_string(d);
}

void add_path(std::vector<Edge>& edges, int vertices) {
  for (int i = 0; i + 1 < vertices; ++i) edges.push_back({i, i + 1});
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [family, known] : kNames) {
    if (known == name) return family;
  }
  throw InputError("unknown graph family \"" + std::string(name) + "\"");
}

Graph make_path(int n) {
  if (n < 2) throw InputError("path needs n >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  add_path(edges, n);
  return Graph(n, edges);
}

std::vector<VolcanoSplit> volcano_splits(int n, int d) {
  if (d < 2 || n < d + 1) throw InputError("volcano needs d >= 2 and n >= d+1, " + params(n, d));
  const int extra = n - d - 1;
  if (d % 2 == 0) return {{extra, 0}};
  std::vector<VolcanoSplit> out;
  for (int a = extra; a >= 0; --a) out.push_back({a, extra - a});
  return out;
}

Graph make_volcano(int n, int d, std::optional<VolcanoSplit> split) {
  if (d < 2 || n < d + 1) throw InputError("volcano needs d >= 2 and n >= d+1, " + params(n, d));
  const int extra = n - d - 1;
  const VolcanoSplit chosen = split.value_or(VolcanoSplit{extra, 0});
  if (chosen.first < 0 || chosen.second < 0 || chosen.first + chosen.second != extra) {
    throw InputError("volcano split must be two non-negative counts summing to " +
                     std::to_string(extra));
  }
  if (d % 2 == 0 && chosen.second != 0) {
    throw InputError("even-diameter volcano has a single center; split must be (" +
                     std::to_string(extra) + ",0)");
  }
  std::vector<Edge> edges;
  add_path(edges, d + 1);
  const int lower = d % 2 == 0 ? d / 2 : (d - 1) / 2;
  const int upper = d % 2 == 0 ? d / 2 : (d + 1) / 2;
  int next = d + 1;
  for (int i = 0; i < chosen.first; ++i) edges.push_back({lower, next++});
  for (int i = 0; i < chosen.second; ++i) edges.push_back({upper, next++});
  return Graph(n, edges);
}

Graph make_broom(int n, int d) {
  if (d < 3 || n <= d) throw InputError("broom needs n > d >= 3, " + params(n, d));
  std::vector<Edge> edges;
  add_path(edges, d);
  for (int v = d; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

Graph make_lollipop(int n, int d) {
  if (d < 2 || n <= d) throw InputError("lollipop needs n > d >= 2, " + params(n, d));
  std::vector<Edge> edges;
  add_path(edges, d);
  for (int u = d; u < n; ++u) {
    edges.push_back({0, u});
    for (int w = u + 1; w < n; ++w) edges.push_back({u, w});
  }
  return Graph(n, edges);
}

Graph make_star(int n) {
  if (n < 2) throw InputError("star needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  add_path(edges, n);
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

Graph make_family(const FamilySpec& spec) {
  if (spec.split && spec.family != Family::kVolcano) {
    throw InputError("split only applies to volcano graphs");
  }
  switch (spec.family) {
    case Family::kPath:
      return make_path(spec.n);
    case Family::kVolcano:
      return make_volcano(spec.n, spec.d, spec.split);
    case Family::kBroom:
      return make_broom(spec.n, spec.d);
    case Family::kLollipop:
      return make_lollipop(spec.n, spec.d);
    case Family::kStar:
      return make_star(spec.n);
    case Family::kCycle:
      return make_cycle(spec.n);
  }
  throw InputError("unknown family");
}

}  // namespace ecindex
