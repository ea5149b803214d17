#include "cmg/report.hpp"

#include "cmg/enumerate.hpp"
#include "cmg/errors.hpp"
#include "cmg/invariants.hpp"

namespace cmg {

PairedLabeling choose_labeling(const GraphFile& file, std::vector<std::string>& warnings) {
  if (!file.pairs.empty()) {
    try {
      return PairedLabeling::from_names(file.graph, file.pairs);
    } catch (const StructureError& e) {
      warnings.push_back(std::string("declared pairs rejected: ") + e.what());
    }
  }
  return find_star_labeling(file.graph);
}

nlohmann::json to_json(const ClassMembership& c) {
  return {{"vertex_count", c.vertex_count},
          {"height", c.height},
          {"has_isolated", c.has_isolated},
          {"in_class", c.in_class}};
}

nlohmann::json labeling_json(const PairedLabeling& pl) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [x, y] : pl.named_pairs()) pairs.push_back({x, y});
  return {{"n", pl.n()}, {"pairs", pairs}};
}

nlohmann::json to_json(const CmReport& r) {
  nlohmann::json doc;
  doc["value"] = r.value == Truth::Inconclusive ? nlohmann::json("inconclusive") : nlohmann::json(r.value == Truth::True);
  doc["primary"] = std::string(1, route_letter(r.primary));
  doc["routes"] = nlohmann::json::object();
  for (const auto& [route, v] : r.routes) {
    nlohmann::json entry = to_json(v);
    entry["name"] = route_name(route);
    doc["routes"][std::string(1, route_letter(route))] = entry;
  }
  return doc;
}

Analysis analyze(const GraphFile& file, std::string_view source, const AnalysisOptions& options) {
  Analysis out;
  nlohmann::json& doc = out.document;
  std::vector<std::string> warnings;
  const Graph& g = file.graph;
  const ClassMembership membership = classify(g);

  doc["schema_version"] = "analysis-v1";
  doc["input_digest"] = content_digest(source);
  doc["in_class"] = membership.in_class;
  doc["class"] = to_json(membership);
  doc["unmixed"] = to_json(unmixed_verdict(g));

  std::optional<PairedLabeling> pl;
  if (membership.in_class) {
    try {
      pl = choose_labeling(file, warnings);
      doc["labeling"] = labeling_json(*pl);
    } catch (const InputError& e) {
      doc["labeling"] = {{"error", e.what()}};
    } catch (const StructureError& e) {
      doc["labeling"] = {{"error", e.what()}};
      warnings.emplace_back("no labeling; unmixedness from cover sizes only");
    }
  } else {
    doc["labeling"] = {{"error", "graph is not in the class 2*height = #V without isolated vertices"}};
  }

  doc["cm"] = nullptr;
  if (pl) {
    doc["bounds"] = to_json(generator_bounds(*pl));
    doc["structure"] = {{"degree_one", to_json(degree_one_exists(*pl))},
                        {"minimal_prime_shape", to_json(minimal_prime_shape(*pl))},
                        {"double_star_violation", nullptr}};
    if (auto bad = double_star_violation(*pl)) {
      doc["structure"]["double_star_violation"] = {g.name(pl->x(bad->first)), g.name(pl->y(bad->second))};
    }
    if (unmixed_structural(*pl).holds()) {
      const CmReport cm = cm_verdict(*pl, options.cm);
      doc["cm"] = to_json(cm);
      out.cm = cm.value;
      out.cm_evaluated = true;
      if (cm.value == Truth::Inconclusive) warnings.emplace_back("every selected route was inconclusive");
      if (options.with_invariants && cm.value == Truth::True) doc["invariants"] = to_json(invariant_report(*pl));
    } else {
      doc["cm"] = {{"value", false}, {"primary", nullptr}, {"routes", nlohmann::json::object()}};
      warnings.emplace_back("graph is mixed, so it is not Cohen-Macaulay; routes not evaluated");
      out.cm = Truth::False;
    }
  }
  doc["warnings"] = warnings;
  return out;
}

}  // namespace cmg
