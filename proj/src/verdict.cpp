#include "cmg/verdict.hpp"

namespace cmg {

using nlohmann::json;

namespace {

json pairs_json(const std::vector<std::pair<std::string, std::string>>& edges) {
  json out = json::array();
  for (const auto& [a, b] : edges) out.push_back(json::array({a, b}));
  return out;
}

json size_profile_json(const SizeProfile& p) {
  return json{{"kind", "size_profile"}, {"sizes", p.sizes}, {"witnesses", p.witnesses}};
}

struct CertificateJson {
  json operator()(const std::monostate&) const { return nullptr; }
  json operator()(const SizeProfile& p) const { return size_profile_json(p); }
  json operator()(const CycleCertificate& c) const { return json{{"kind", "cycle"}, {"indices", c.indices}}; }
  json operator()(const MatchingCertificate& m) const {
    return json{{"kind", "matching"}, {"edges", pairs_json(m.edges)}};
  }
  json operator()(const FacetChain& c) const { return json{{"kind", "facet_chain"}, {"facets", c.facets}}; }
  json operator()(const FacetComponents& c) const {
    return json{{"kind", "facet_components"}, {"components", c.components}};
  }
  json operator()(const ShellingCertificate& s) const { return json{{"kind", "shelling"}, {"order", s.order}}; }
  json operator()(const SearchExhausted& s) const { return json{{"kind", "search_exhausted"}, {"states", s.states}}; }
  json operator()(const SubsetWitness& s) const {
    return json{{"kind", "subset"}, {"subset", s.subset}, {"covers", size_profile_json(s.covers)}};
  }
  json operator()(const HomologyWitness& h) const {
    return json{{"kind", "homology"},     {"face", h.face},   {"link_dim", h.link_dim},
                {"reduced_betti", h.reduced_betti}, {"field", h.field}, {"offending_dim", h.offending_dim}};
  }
  json operator()(const ConditionViolation& c) const {
    return json{{"kind", "condition"},
                {"condition", c.condition},
                {"present", pairs_json(c.present)},
                {"absent", pairs_json(c.absent)}};
  }
  json operator()(const EdgeBounds& b) const {
    return json{{"kind", "edge_bounds"},        {"edges", b.edges},
                {"n", b.n},                     {"unmixed", b.unmixed},
                {"cohen_macaulay", b.cohen_macaulay}, {"unmixed_bound", b.unmixed_bound},
                {"cm_bound", b.cm_bound}};
  }
  json operator()(const DegreeWitness& d) const {
    return json{{"kind", "degrees"}, {"degree_one", d.degree_one}, {"degrees", d.degrees}};
  }
  json operator()(const SetWitness& s) const { return json{{"kind", "set"}, {"set", s.set}}; }
};

}  // namespace

const char* to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

json to_json(const Certificate& c) { return std::visit(CertificateJson{}, c); }

json to_json(const Verdict& v) {
  json out;
  if (v.value == Truth::Inconclusive) {
    out["value"] = "inconclusive";
  } else {
    out["value"] = v.holds();
  }
  out["route"] = v.route;
  out["certificate"] = to_json(v.certificate);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

}  // namespace cmg
