#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmg/criteria.hpp"
#include "cmg/graph_io.hpp"

namespace cmg {

/// Declared pairs when they form a valid labeling, otherwise a discovered
/// one. Appends a warning when declared pairs are rejected. Throws what
/// find_star_labeling throws when nothing works.
PairedLabeling choose_labeling(const GraphFile& file, std::vector<std::string>& warnings);

nlohmann::json to_json(const ClassMembership& c);
nlohmann::json labeling_json(const PairedLabeling& pl);
nlohmann::json to_json(const CmReport& r);

struct AnalysisOptions {
  CmOptions cm;
  bool with_invariants = true;
};

struct Analysis {
  nlohmann::json document;
  /// cm value when evaluated; Inconclusive covers "not evaluated" too.
  Truth cm = Truth::Inconclusive;
  bool cm_evaluated = false;
};

/// Full analysis-v1 document for a parsed graph file. `source` is the raw
/// file text used for the digest. EquivalenceViolation propagates.
Analysis analyze(const GraphFile& file, std::string_view source, const AnalysisOptions& options = {});

}  // namespace cmg
