#include "ecindex/report.hpp"

#include <algorithm>
#include <sstream>

namespace ecindex {
namespace {

using nlohmann::json;

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t i = 0; i < rows_[r].size(); ++i) {
        if (i > 0) out << "  ";
        out << std::string(width[i] - rows_[r][i].size(), ' ') << rows_[r][i];
      }
      out << '\n';
      if (r == 0) {
        std::size_t total = 0;
        for (std::size_t w : width) total += w;
        out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
      }
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string str(std::uint64_t x) { return std::to_string(x); }
std::string str(std::int64_t x) { return std::to_string(x); }
std::string str(int x) { return std::to_string(x); }
std::string str(EciValue x) { return std::to_string(x.value); }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<Vertex>& vs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

ComputeRecord compute_record(const Graph& g) {
  const auto p = profile(g);
  return {g.order(), g.size(), p.diameter, p.radius, eci(p), p.degree, p.eccentricity};
}

json to_json(const ComputeRecord& r) {
  json vertices = json::array();
  for (std::size_t v = 0; v < r.degree.size(); ++v) {
    vertices.push_back({{"vertex", v}, {"degree", r.degree[v]}, {"eccentricity", r.eccentricity[v]}});
  }
  return {{"n", r.order},           {"m", r.edges}, {"diameter", r.diameter},
          {"radius", r.radius},     {"eci", r.eci.value}, {"vertices", vertices}};
}

std::string render_table(const ComputeRecord& r) {
  std::ostringstream out;
  out << "n = " << r.order << ", m = " << r.edges << ", diameter = " << r.diameter
      << ", radius = " << r.radius << ", eci = " << r.eci << "\n\n";
  TextTable t({"vertex", "degree", "eccentricity", "product"});
  for (std::size_t v = 0; v < r.degree.size(); ++v) {
    t.add({str(static_cast<int>(v)), str(r.degree[v]), str(r.eccentricity[v]),
           str(r.degree[v] * r.eccentricity[v])});
  }
  out << t.render();
  return out.str();
}

json to_json(const VerificationReport& r) {
  json buckets = json::array();
  for (const auto& b : r.buckets) {
    buckets.push_back({
        {"n", b.order},
        {"d", b.diameter},
        {"graphs_checked", b.graphs_checked},
        {"isomorphism_classes", b.isomorphism_classes ? json(*b.isomorphism_classes) : json(nullptr)},
        {"min_eci", b.min_eci.value},
        {"volcano_eci", b.volcano_eci.value},
        {"holds", b.holds()},
        {"asserted", b.asserted},
        {"violations", b.violations},
        {"equality_witnesses", b.equality_witnesses},
        {"equality_all_volcano", b.equality_all_volcano},
    });
  }
  return {{"n", r.order},         {"trees_only", r.trees_only}, {"dedup", r.dedup},
          {"passed", r.passed()}, {"buckets", buckets}};
}

std::string render_table(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.trees_only ? "trees" : "connected graphs") << " on " << r.order
      << " vertices" << (r.trees_only || r.dedup ? "" : " (labeled)") << "\n\n";
  TextTable t({"d", "graphs", "classes", "min_eci", "volcano_eci", "violations",
               "equality", "all_volcano", "mode"});
  for (const auto& b : r.buckets) {
    t.add({str(b.diameter), str(b.graphs_checked),
           b.isomorphism_classes ? str(*b.isomorphism_classes) : "-", str(b.min_eci),
           str(b.volcano_eci), str(static_cast<std::uint64_t>(b.violations.size())),
           str(static_cast<std::uint64_t>(b.equality_witnesses.size())),
           yes_no(b.equality_all_volcano), b.asserted ? "asserted" : "report-only"});
  }
  out << t.render();
  for (const auto& b : r.buckets) {
    if (b.asserted) continue;
    out << "\nd = " << b.diameter << ": bound " << (b.holds() ? "holds" : "FAILS")
        << " (report only; outside the d >= 3 range where the bound is asserted)\n";
  }
  out << '\n' << (r.passed() ? "PASS" : "FAIL") << ": "
      << (r.passed() ? "no violations for d >= 3" : "violations found for d >= 3") << '\n';
  return out.str();
}

json to_json(const std::vector<CensusEntry>& census) {
  json out = json::array();
  for (const auto& c : census) {
    out.push_back({{"n", c.order}, {"d", c.diameter}, {"witnesses", c.witnesses},
                   {"all_volcano", c.all_volcano}});
  }
  return out;
}

std::string render_table(const std::vector<CensusEntry>& census) {
  TextTable t({"d", "witnesses", "all_volcano", "graph6"});
  for (const auto& c : census) {
    std::string shown;
    for (std::size_t i = 0; i < c.witnesses.size() && i < 4; ++i) {
      shown += (i ? " " : "") + c.witnesses[i];
    }
    if (c.witnesses.size() > 4) shown += " ...";
    t.add({str(c.diameter), str(static_cast<std::uint64_t>(c.witnesses.size())),
           yes_no(c.all_volcano), shown});
  }
  return t.render();
}

json to_json(const std::vector<ChainStep>& chain, const ChainCheck& check) {
  json steps = json::array();
  for (const auto& s : chain) {
    steps.push_back({{"step", s.step_index},
                     {"added_vertex", s.added_vertex ? json(*s.added_vertex) : json(nullptr)},
                     {"order", s.subgraph_order},
                     {"diameter", s.subgraph_diameter},
                     {"eci", s.subgraph_eci.value},
                     {"volcano_reference", s.volcano_reference.value},
                     {"delta", s.delta}});
  }
  return {{"d", check.diameter},
          {"steps", steps},
          {"step_floor", check.step_floor},
          {"volcano_increment", check.volcano_increment},
          {"floor_failures", check.floor_failures},
          {"increment_mismatches", check.increment_mismatches},
          {"final_asserted", check.final_asserted},
          {"final_holds", check.final_holds}};
}

std::string render_table(const std::vector<ChainStep>& chain, const ChainCheck& check) {
  TextTable t({"step", "added", "order", "diameter", "eci", "volcano", "delta"});
  for (const auto& s : chain) {
    t.add({str(s.step_index), s.added_vertex ? str(*s.added_vertex) : "-",
           str(s.subgraph_order), str(s.subgraph_diameter), str(s.subgraph_eci),
           str(s.volcano_reference), s.step_index == 0 ? "-" : str(s.delta)});
  }
  std::ostringstream out;
  out << t.render() << '\n'
      << "per-step floor " << check.step_floor << ": "
      << (check.floor_failures.empty() ? "met at every step"
                                       : str(static_cast<int>(check.floor_failures.size())) +
                                             " step(s) below (diagnostic)")
      << '\n'
      << "final eci >= volcano: " << (check.final_holds ? "holds" : "FAILS")
      << (check.final_asserted ? "" : " (d = 2, report only)") << '\n';
  return out.str();
}

json to_json(const DiametralPartition& p, std::optional<EciValue> bound, EciValue actual) {
  json classes = json::array();
  for (std::size_t v = 0; v < p.classes.size(); ++v) classes.push_back(to_string(p.classes[v]));
  const auto& c = p.counts;
  return {{"path", p.path.vertices},
          {"n", p.order},
          {"d", p.diameter},
          {"classes", classes},
          {"counts", {{"n1", c.n1}, {"n2", c.n2}, {"n11", c.n11}, {"n12", c.n12},
                      {"n21", c.n21}, {"n22", c.n22}}},
          {"lower_bound", bound ? json(bound->value) : json(nullptr)},
          {"eci", actual.value}};
}

std::string render_table(const DiametralPartition& p, std::optional<EciValue> bound,
                         EciValue actual) {
  std::ostringstream out;
  out << "diametral path: " << join(p.path.vertices, " - ") << "  (d = " << p.diameter << ")\n\n";
  TextTable t({"vertex", "class"});
  for (std::size_t v = 0; v < p.classes.size(); ++v) {
    t.add({str(static_cast<int>(v)), to_string(p.classes[v])});
  }
  const auto& c = p.counts;
  out << t.render() << "\nn1 = " << c.n1 << "  n2 = " << c.n2 << "  n11 = " << c.n11
      << "  n12 = " << c.n12 << "  n21 = " << c.n21 << "  n22 = " << c.n22 << '\n'
      << "eci = " << actual;
  if (bound) out << ", partition bound = " << *bound;
  out << '\n';
  return out.str();
}

json to_json(const Lemma1Report& l1, const Lemma2Report& l2) {
  json findings = json::array();
  for (const auto& f : l1.findings) {
    findings.push_back({{"vertex", f.vertex},
                        {"eccentricity", f.eccentricity},
                        {"on_geodesic", f.on_geodesic},
                        {"adjacent_to_both_centers", f.adjacent_to_both_centers},
                        {"passed", f.passed},
                        {"witness", f.witness}});
  }
  return {{"d", l1.diameter},
          {"path", l1.path.vertices},
          {"lemma1", {{"passed", l1.passed()}, {"findings", findings}}},
          {"lemma2", {{"passed", l2.passed()}, {"central", l2.central},
                      {"violations", l2.violations}}}};
}

std::string render_table(const Lemma1Report& l1, const Lemma2Report& l2) {
  std::ostringstream out;
  out << "diametral path: " << join(l1.path.vertices, " - ") << "  (d = " << l1.diameter << ")\n\n"
      << "off-path vertices of minimum eccentricity\n";
  TextTable t({"vertex", "ecc", "on_geodesic", "adj_both_centers", "result", "witness"});
  for (const auto& f : l1.findings) {
    t.add({str(f.vertex), str(f.eccentricity), yes_no(f.on_geodesic),
           yes_no(f.adjacent_to_both_centers), f.passed ? "pass" : "FAIL",
           f.witness.empty() ? "-" : join(f.witness, "-")});
  }
  out << t.render() << "lemma 1: " << (l1.passed() ? "pass" : "FAIL") << "\n\n"
      << "central vertices: " << (l2.central.empty() ? "-" : join(l2.central)) << '\n'
      << "lemma 2 (degree >= 2): "
      << (l2.passed() ? "pass" : "FAIL at " + join(l2.violations)) << '\n';
  return out.str();
}

}  // namespace ecindex
