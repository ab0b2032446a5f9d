#pragma once

// Human tables and JSON records for everything the command-line tool prints.
// The JSON layout is described in docs/report-schema.md.

#include <optional>
#include <string>
#include <vector>

#include "ecindex/enumerate.hpp"
#include "ecindex/graph.hpp"
#include "ecindex/indices.hpp"
#include "ecindex/structure.hpp"
#include "json.hpp"

namespace ecindex {

struct ComputeRecord {
  int order = 0;
  std::size_t edges = 0;
  int diameter = 0;
  int radius = 0;
  EciValue eci;
  std::vector<int> degree;
  std::vector<int> eccentricity;
};

ComputeRecord compute_record(const Graph& g);

nlohmann::json to_json(const ComputeRecord& r);
std::string render_table(const ComputeRecord& r);

nlohmann::json to_json(const VerificationReport& r);
std::string render_table(const VerificationReport& r);

nlohmann::json to_json(const std::vector<CensusEntry>& census);
std::string render_table(const std::vector<CensusEntry>& census);

nlohmann::json to_json(const std::vector<ChainStep>& chain, const ChainCheck& check);
std::string render_table(const std::vector<ChainStep>& chain, const ChainCheck& check);

nlohmann::json to_json(const DiametralPartition& p, std::optional<EciValue> bound,
                       EciValue actual);
std::string render_table(const DiametralPartition& p, std::optional<EciValue> bound,
                         EciValue actual);

nlohmann::json to_json(const Lemma1Report& l1, const Lemma2Report& l2);
std::string render_table(const Lemma1Report& l1, const Lemma2Report& l2);

}  // namespace ecindex
