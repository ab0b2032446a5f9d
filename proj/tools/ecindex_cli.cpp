// Command-line front end: compute, family, verify, chain, partition, lemmas.
//
// Exit codes: 0 success, 1 bound violation (or a failed self-check),
// 2 bad input or parameters, 3 disconnected graph.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "ecindex/error.hpp"
#include "ecindex/families.hpp"
#include "ecindex/io.hpp"
#include "ecindex/report.hpp"

namespace {

using namespace ecindex;

constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDisconnected = 3;

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
  bool json = false;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
  cmd->add_option("input", opts.path, "graph file, '-' for standard input")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "graph6, edgelist or auto")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
      ->capture_default_str();
  cmd->add_flag("--json", opts.json, "machine-readable output");
}

Graph load(const InputOptions& opts) {
  std::string text;
  if (opts.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(opts.path);
    if (!in) throw ParseError("cannot open " + opts.path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const GraphFormat format = opts.format == "graph6"     ? GraphFormat::kGraph6
                             : opts.format == "edgelist" ? GraphFormat::kEdgeList
                                                         : GraphFormat::kAuto;
  const Graph g = read_graph(text, format);
  if (!is_connected(g)) throw DomainError("input graph is disconnected");
  return g;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int run_compute(const InputOptions& opts) {
  const Graph g = load(opts);
  if (g.order() < 2) throw InputError("index needs at least two vertices");
  const auto record = compute_record(g);
  std::cout << (opts.json ? dump(to_json(record)) : render_table(record));
  return 0;
}

struct FamilyOptions {
  std::string name;
  int n = 0;
  int d = 0;
  std::string split;
  std::string format = "graph6";
  bool eci = false;
  bool json = false;
};

VolcanoSplit parse_split(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("split must look like a,b");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const int a = std::stoi(s.substr(0, comma), &used_a);
    const int b = std::stoi(s.substr(comma + 1), &used_b);
    if (used_a != comma || used_b != s.size() - comma - 1) throw InputError("");
    return {a, b};
  } catch (const std::exception&) {
    throw InputError("split must look like a,b");
  }
}

int run_family(const FamilyOptions& opts) {
  FamilySpec spec{parse_family(opts.name), opts.n, opts.d, std::nullopt};
  if (!opts.split.empty()) spec.split = parse_split(opts.split);
  const Graph g = make_family(spec);
  const std::string text = opts.format == "graph6" ? encode_graph6(g) + "\n" : encode_edge_list(g);

  std::optional<EciValue> value;
  std::optional<EciValue> closed;
  if (opts.eci || opts.json) {
    value = eci(g);
    if (spec.family == Family::kPath) closed = eci_path_closed_form(spec.n);
    if (spec.family == Family::kVolcano) closed = eci_volcano_closed_form(spec.n, spec.d);
  }
  const bool agree = !closed || *closed == *value;

  std::ostringstream out;
  if (opts.json) {
    nlohmann::json j = {{"family", to_string(spec.family)},
                        {"n", g.order()},
                        {"m", g.size()},
                        {"graph6", encode_graph6(g)},
                        {"eci", value->value},
                        {"closed_form", closed ? nlohmann::json(closed->value) : nlohmann::json(nullptr)}};
    if (spec.family != Family::kPath && spec.family != Family::kStar &&
        spec.family != Family::kCycle) {
      j["d"] = spec.d;
    }
    out << dump(j);
  } else {
    out << text;
    if (opts.eci) {
      out << "eci " << *value << '\n';
      if (closed) out << "closed_form " << *closed << '\n';
    }
  }
  std::cout << out.str();
  if (!agree) {
    std::cerr << "error: constructed index differs from the closed form\n";
    return kExitViolation;
  }
  return 0;
}

struct VerifyOptions {
  int n = 0;
  std::string diameter;
  bool trees = false;
  bool dedup = false;
  bool large = false;
  int workers = 0;
  std::string witness_out;
  bool json = false;
};

DiameterRange parse_range(const std::string& s) {
  try {
    const auto colon = s.find(':');
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const int d = std::stoi(s, &used);
      if (used != s.size()) throw InputError("");
      return {d, d};
    }
    const int lo = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw InputError("");
    const int hi = std::stoi(s.substr(colon + 1), &used);
    if (used != s.size() - colon - 1) throw InputError("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw InputError("diameter must be D or LO:HI");
  }
}

int run_verify(const VerifyOptions& opts) {
  if (!opts.trees && opts.n >= kMaxSweepGraphOrder && !opts.large) {
    throw CapacityError("a full sweep at n = 8 takes hours; pass --large to run it");
  }
  SweepConfig config;
  config.order = opts.n;
  if (!opts.diameter.empty()) config.diameter = parse_range(opts.diameter);
  config.dedup = opts.dedup;
  config.trees_only = opts.trees;
  config.worker_count = opts.workers > 0
                            ? opts.workers
                            : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (!opts.witness_out.empty()) config.graph6_output = opts.witness_out;
  if (opts.large) {
    config.progress = [](double f) {
      std::cerr << "\rprogress " << static_cast<int>(f * 100) << "%" << std::flush;
      if (f >= 1.0) std::cerr << '\n';
    };
  }
  const auto report = verify_bound(config);
  const auto census = equality_census(report);
  if (opts.json) {
    nlohmann::json j = to_json(report);
    j["census"] = to_json(census);
    std::cout << dump(j);
  } else {
    std::cout << render_table(report) << "\nequality census\n" << render_table(census);
  }
  return report.passed() ? 0 : kExitViolation;
}

int run_chain(const InputOptions& opts) {
  const Graph g = load(opts);
  const auto chain = build_chain(g);
  const auto check = check_chain_deltas(chain, profile(g).diameter);
  std::cout << (opts.json ? dump(to_json(chain, check)) : render_table(chain, check));
  return check.ok() ? 0 : kExitViolation;
}

int run_partition(const InputOptions& opts) {
  const Graph g = load(opts);
  const auto p = partition(g, find_diametral_path(g));
  std::optional<EciValue> bound;
  if (p.diameter >= 3) bound = partition_lower_bound(p);
  const EciValue actual = eci(g);
  std::cout << (opts.json ? dump(to_json(p, bound, actual)) : render_table(p, bound, actual));
  return !bound || actual >= *bound ? 0 : kExitViolation;
}

int run_lemmas(const InputOptions& opts) {
  const Graph g = load(opts);
  const auto l1 = check_lemma1(g, find_diametral_path(g));
  const auto l2 = check_lemma2(g);
  std::cout << (opts.json ? dump(to_json(l1, l2)) : render_table(l1, l2));
  return l2.passed() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eccentric connectivity index toolkit"};
  app.require_subcommand(1);

  InputOptions compute_opts;
  auto* compute = app.add_subcommand("compute", "degrees, eccentricities and the index of a graph");
  add_input_options(compute, compute_opts);

  FamilyOptions family_opts;
  auto* family = app.add_subcommand("family", "construct a path, volcano, broom, lollipop, star or cycle");
  family->add_option("family", family_opts.name, "family name")->required();
  family->add_option("-n", family_opts.n, "order")->required();
  family->add_option("-d", family_opts.d, "diameter parameter");
  family->add_option("--split", family_opts.split, "volcano pendants per center, a,b (odd d)");
  family->add_option("--format", family_opts.format, "graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  family->add_flag("--eci", family_opts.eci, "print the index (and closed form where known)");
  family->add_flag("--json", family_opts.json, "machine-readable output");

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "exhaustive check of eci(G) >= eci(V_{n,d})");
  verify->add_option("-n", verify_opts.n, "order")->required();
  verify->add_option("-d", verify_opts.diameter, "diameter D or range LO:HI (default all d >= 2)");
  verify->add_flag("--trees", verify_opts.trees, "free trees only (n <= 10)");
  verify->add_flag("--dedup", verify_opts.dedup, "also count isomorphism classes");
  verify->add_flag("--large", verify_opts.large, "allow the n = 8 general sweep");
  verify->add_option("--workers", verify_opts.workers, "worker threads")->envname("ECI_WORKERS");
  verify->add_option("--witness-out", verify_opts.witness_out, "write equality witnesses (graph6)");
  verify->add_flag("--json", verify_opts.json, "machine-readable output");

  InputOptions chain_opts;
  auto* chain = app.add_subcommand("chain", "incremental induced-subgraph chain from a diametral path");
  add_input_options(chain, chain_opts);

  InputOptions partition_opts;
  auto* part = app.add_subcommand("partition", "vertex classes relative to a fixed diametral path");
  add_input_options(part, partition_opts);

  InputOptions lemma_opts;
  auto* lemmas = app.add_subcommand("lemmas", "check the minimum-eccentricity lemmas");
  add_input_options(lemmas, lemma_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*compute) return run_compute(compute_opts);
    if (*family) return run_family(family_opts);
    if (*verify) return run_verify(verify_opts);
    if (*chain) return run_chain(chain_opts);
    if (*part) return run_partition(partition_opts);
    if (*lemmas) return run_lemmas(lemma_opts);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDisconnected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
