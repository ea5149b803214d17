#pragma once

#include <cstddef>
#include <vector>

#include "cmg/pairing.hpp"
#include "cmg/verdict.hpp"

namespace cmg {

struct InvariantReport {
  std::size_t cm_type = 0;
  std::vector<NameSet> socle_monomials;
  bool level = false;
  bool gorenstein = false;
  bool complete_intersection = false;
};

/// Maximal independent sets of O_[n](G)|_X, in lex order, as x-name sets.
/// All operations here throw PreconditionError unless pl is Cohen-Macaulay.
std::vector<NameSet> socle_generators(const PairedLabeling& pl);

/// Number of minimal vertex covers of O_[n](G)|_X. Throws
/// EquivalenceViolation if it differs from the socle generator count.
std::size_t cm_type(const PairedLabeling& pl);

/// O_[n](G)|_X unmixed. Certificate: its cover SizeProfile.
Verdict is_level(const PairedLabeling& pl);

/// E(G) is exactly the pair matching. Throws EquivalenceViolation unless
/// that agrees with cm_type == 1.
Verdict is_gorenstein(const PairedLabeling& pl);

InvariantReport invariant_report(const PairedLabeling& pl);

nlohmann::json to_json(const InvariantReport& r);

}  // namespace cmg
