#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cmg {

enum class Truth { False, True, Inconclusive };

using NameSet = std::vector<std::string>;

/// Multiset of cover (or facet) sizes; when mixed, two witnesses of
/// different sizes.
struct SizeProfile {
  std::vector<std::size_t> sizes;
  std::vector<NameSet> witnesses;
};

/// Pair indices (1-based) of an alternating cycle
/// x_{i1} y_{i1} x_{i2} y_{i2} ... y_{ir} x_{i1}.
struct CycleCertificate {
  std::vector<std::size_t> indices;
};

struct MatchingCertificate {
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Consecutive facets share a codimension-one face.
struct FacetChain {
  std::vector<NameSet> facets;
};

struct FacetComponents {
  std::vector<std::vector<NameSet>> components;
};

struct ShellingCertificate {
  std::vector<NameSet> order;
};

/// Exhaustive shelling search found nothing; not independently checkable.
struct SearchExhausted {
  std::size_t states = 0;
};

/// O_T(G) is mixed for this subset T (1-based indices).
struct SubsetWitness {
  std::vector<std::size_t> subset;
  SizeProfile covers;
};

struct HomologyWitness {
  NameSet face;
  int link_dim = -1;
  std::vector<std::size_t> reduced_betti;  // dimensions -1 .. link_dim
  std::string field;
  int offending_dim = -1;
};

/// A violated edge condition. `present` edges exist, `absent` ones are
/// required but missing (condition (i)) or forbidden but present (condition
/// (ii) lists both offending edges as present).
struct ConditionViolation {
  std::string condition;
  std::vector<std::pair<std::string, std::string>> present;
  std::vector<std::pair<std::string, std::string>> absent;
};

struct EdgeBounds {
  std::size_t edges = 0;
  std::size_t n = 0;
  bool unmixed = false;
  bool cohen_macaulay = false;
  std::size_t unmixed_bound = 0;
  std::size_t cm_bound = 0;
};

struct DegreeWitness {
  NameSet degree_one;
  std::vector<std::size_t> degrees;
};

/// A single offending vertex set.
struct SetWitness {
  NameSet set;
};

using Certificate = std::variant<std::monostate, SizeProfile, CycleCertificate, MatchingCertificate, FacetChain,
                                 FacetComponents, ShellingCertificate, SearchExhausted, SubsetWitness,
                                 HomologyWitness, ConditionViolation, EdgeBounds, DegreeWitness, SetWitness>;

struct Verdict {
  Truth value = Truth::Inconclusive;
  std::string route;
  Certificate certificate;
  std::string note;

  bool holds() const { return value == Truth::True; }
  bool fails() const { return value == Truth::False; }
  bool conclusive() const { return value != Truth::Inconclusive; }
};

inline Truth truth(bool b) { return b ? Truth::True : Truth::False; }
const char* to_string(Truth t);

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const Verdict& v);

}  // namespace cmg
