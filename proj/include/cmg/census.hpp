#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmg/pairing.hpp"

namespace cmg {

/// Labeled graphs on x1..xn, y1..yn that contain every pair edge and no y-y
/// edge. Graph k includes optional edge b iff bit b of k is set; optional
/// edges are the x_i x_j (i < j) followed by the x_i y_j (i != j).
class ClassEnumerator {
 public:
  /// Throws InputError for n == 0 or n > 7 (indices are 64-bit).
  explicit ClassEnumerator(std::size_t n);

  std::size_t n() const { return n_; }
  const std::vector<Edge>& optional_edges() const { return optional_; }
  /// 2^(optional edge count).
  std::uint64_t size() const { return std::uint64_t{1} << optional_.size(); }
  Graph graph(std::uint64_t index) const;
  /// Pairs x_i with y_i; throws StructureError if that is not a labeling.
  PairedLabeling labeling(std::uint64_t index) const;
  /// One generator draw per optional edge, low bit decides inclusion.
  std::uint64_t sample_index(std::mt19937_64& rng) const;

 private:
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<Edge> pair_edges_;
  std::vector<Edge> optional_;
};

enum class CensusMode { Exhaustive, Sample };

struct CensusOptions {
  std::size_t n = 2;
  CensusMode mode = CensusMode::Exhaustive;
  std::size_t count = 10000;
  std::uint64_t seed = 0;
  /// 0 = hardware concurrency.
  std::size_t threads = 1;
};

struct CheckTally {
  std::size_t checked = 0;
  std::size_t violations = 0;
};

struct CensusViolation {
  std::uint64_t index = 0;
  std::string check;
  std::string detail;
  std::string graph;
};

struct CensusReport {
  std::size_t n = 0;
  CensusMode mode = CensusMode::Exhaustive;
  std::uint64_t seed = 0;
  std::size_t drawn = 0;
  std::size_t population = 0;
  std::size_t unmixed_count = 0;
  std::size_t cm_count = 0;
  std::map<std::size_t, std::size_t> type_histogram;
  std::map<std::string, CheckTally> checks;
  std::map<std::string, std::size_t> inconclusive_routes;
  std::vector<CensusViolation> violations;
  double runtime_ms = 0;
};

/// Names of the per-graph checks, in report order.
const std::vector<std::string>& census_check_names();

/// Runs every applicable check on each enumerated (or sampled) graph.
/// Throws CapacityError for exhaustive mode above n = 4.
CensusReport cross_validate(const CensusOptions& options);

const char* to_string(CensusMode m);
CensusMode parse_census_mode(std::string_view text);

/// runtime_ms is omitted unless requested, so reports compare byte for byte.
nlohmann::json to_json(const CensusReport& r, bool include_runtime = false);
/// "type,count" lines for the CM type histogram.
std::string histogram_csv(const CensusReport& r);

}  // namespace cmg
