// cmgraph: command-line front end.
//
// Exit codes: 0 completed, 1 input error, 2 capacity or inconclusive,
// 3 equivalence violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmg/census.hpp"
#include "cmg/complex.hpp"
#include "cmg/criteria.hpp"
#include "cmg/enumerate.hpp"
#include "cmg/errors.hpp"
#include "cmg/graph_io.hpp"
#include "cmg/homology.hpp"
#include "cmg/invariants.hpp"
#include "cmg/kernels.hpp"
#include "cmg/report.hpp"
#include "cmg/transform.hpp"

namespace {

using namespace cmg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitViolation = 3;

std::string summarize(const Verdict& v) {
  std::string s = to_string(v.value);
  if (!v.route.empty()) s += " [" + v.route + "]";
  if (!std::holds_alternative<std::monostate>(v.certificate)) s += " " + to_json(v.certificate).dump();
  if (!v.note.empty()) s += " (" + v.note + ")";
  return s;
}

std::string json_truth(const nlohmann::json& j) { return j.is_boolean() ? (j.get<bool>() ? "true" : "false") : j.dump(); }

std::string pairs_text(const PairedLabeling& pl) {
  std::string s;
  for (const auto& [x, y] : pl.named_pairs()) s += (s.empty() ? "" : " ") + x + "-" + y;
  return s;
}

std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || value < 1 || value > n) {
      throw InputError("--set entries must be pair indices 1.." + std::to_string(n) + ", got '" + item + "'");
    }
    out.push_back(value - 1);
  }
  return out;
}

BGraftBlock load_block(const std::string& path) {
  GraphFile f = read_graph_file(path);
  BGraftBlock block{f.graph, f.x_side, f.y_side};
  if (block.x_side.empty() && block.y_side.empty()) {
    for (const auto& [x, y] : f.pairs) {
      block.x_side.push_back(x);
      block.y_side.push_back(y);
    }
  }
  if (block.x_side.empty() && block.y_side.empty()) {
    throw SpecError(path + ": block needs `part X|Y` lines or declared pairs");
  }
  return block;
}

struct Flags {
  std::string file;
  bool json = false;
  std::string routes = "a,b,c,d,e,f";
  std::string field = "2";
  std::string set;
  std::string h0;
  std::vector<std::string> blocks;
  bool list_socle = false;
  std::size_t n = 2;
  std::string mode = "exhaustive";
  std::size_t count = 10000;
  std::optional<std::uint64_t> seed;
  std::string csv;
  std::size_t threads = 0;
  bool timing = false;
  std::string isa;
};

int cmd_classify(const Flags& f) {
  const std::string text = read_text_file(f.file);
  const GraphFile file = parse_graph_text(text);
  const ClassMembership c = classify(file.graph);
  nlohmann::json doc = {{"input_digest", content_digest(text)}, {"class", to_json(c)}};
  std::vector<std::string> warnings;
  std::string labeling_line;
  if (c.in_class) {
    try {
      const PairedLabeling pl = choose_labeling(file, warnings);
      doc["labeling"] = labeling_json(pl);
      labeling_line = pairs_text(pl);
    } catch (const StructureError& e) {
      doc["labeling"] = {{"error", e.what()}};
      labeling_line = std::string("none (") + e.what() + ")";
    }
  }
  doc["warnings"] = warnings;
  if (f.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "vertices: " << c.vertex_count << "\nheight: " << c.height
              << "\nisolated vertices: " << (c.has_isolated ? "yes" : "no")
              << "\nin class: " << (c.in_class ? "yes" : "no") << '\n';
    if (c.in_class) std::cout << "labeling: " << labeling_line << '\n';
    for (const auto& w : warnings) std::cout << "warning: " << w << '\n';
  }
  return kExitOk;
}

int cmd_check(const Flags& f) {
  const std::string text = read_text_file(f.file);
  const GraphFile file = parse_graph_text(text);
  AnalysisOptions options;
  options.cm.routes = parse_routes(f.routes);
  options.cm.field = Field::parse(f.field);
  if (f.seed) options.cm.seed = *f.seed;
  const Analysis a = analyze(file, text, options);
  const nlohmann::json& doc = a.document;
  if (f.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "in class: " << (doc["in_class"].get<bool>() ? "yes" : "no") << '\n';
    if (doc["labeling"].contains("pairs")) {
      std::string s;
      for (const auto& p : doc["labeling"]["pairs"]) s += (s.empty() ? "" : " ") + p[0].get<std::string>() + "-" + p[1].get<std::string>();
      std::cout << "labeling: " << s << '\n';
    } else {
      std::cout << "labeling: none (" << doc["labeling"]["error"].get<std::string>() << ")\n";
    }
    std::cout << "unmixed: " << json_truth(doc["unmixed"]["value"]) << '\n';
    if (!doc["cm"].is_null()) {
      std::cout << "cohen-macaulay: " << json_truth(doc["cm"]["value"]) << '\n';
      for (const auto& [letter, v] : doc["cm"]["routes"].items()) {
        std::cout << "  " << letter << " " << v["name"].get<std::string>() << ": " << json_truth(v["value"]);
        if (v.contains("certificate") && !v["certificate"].is_null()) std::cout << ' ' << v["certificate"].dump();
        if (v.contains("note")) std::cout << " (" << v["note"].get<std::string>() << ")";
        std::cout << '\n';
      }
    }
    if (doc.contains("invariants")) {
      const auto& inv = doc["invariants"];
      std::cout << "type: " << inv["cm_type"] << "\nlevel: " << json_truth(inv["level"])
                << "\ngorenstein: " << json_truth(inv["gorenstein"]) << '\n';
    }
    for (const auto& w : doc["warnings"]) std::cout << "warning: " << w.get<std::string>() << '\n';
  }
  return a.cm_evaluated && a.cm == Truth::Inconclusive ? kExitCapacity : kExitOk;
}

int cmd_transform(const Flags& f) {
  const GraphFile file = read_graph_file(f.file);
  std::vector<std::string> warnings;
  const PairedLabeling pl = choose_labeling(file, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  const Graph out = o_set(pl, parse_index_list(f.set, pl.n()));
  if (f.json) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : out.named_edges()) edges.push_back({a, b});
    std::cout << nlohmann::json{{"graph", format_graph(out)}, {"edges", edges}, {"labeling", labeling_json(pl)}}.dump(2)
              << '\n';
  } else {
    std::cout << format_graph(out);
  }
  return kExitOk;
}

int cmd_graft(const Flags& f) {
  BGraftSpec spec;
  spec.h0 = read_graph_file(f.h0).graph;
  for (const auto& path : f.blocks) spec.blocks.push_back(load_block(path));
  const GraftResult r = b_graft(spec);
  if (f.json) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : r.graph.named_edges()) edges.push_back({a, b});
    std::cout << nlohmann::json{{"graph", format_graph(r.graph)}, {"edges", edges}, {"labeling", labeling_json(r.labeling)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << format_graph(r.graph);
  }
  return kExitOk;
}

int cmd_invariants(const Flags& f) {
  const GraphFile file = read_graph_file(f.file);
  std::vector<std::string> warnings;
  const PairedLabeling pl = choose_labeling(file, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  const InvariantReport r = invariant_report(pl);
  if (f.list_socle) {
    for (const auto& s : r.socle_monomials) {
      std::string line;
      for (const auto& v : s) line += (line.empty() ? "" : " ") + v;
      std::cout << line << '\n';
    }
    return kExitOk;
  }
  nlohmann::json doc = to_json(r);
  doc["schema_version"] = "invariants-v1";
  doc["labeling"] = labeling_json(pl);
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_census(const Flags& f) {
  CensusOptions options;
  options.n = f.n;
  options.mode = parse_census_mode(f.mode);
  options.count = f.count;
  options.threads = f.threads;
  if (options.mode == CensusMode::Sample) {
    if (!f.seed) throw InputError("sample mode needs an explicit --seed");
    options.seed = *f.seed;
  }
  const CensusReport r = cross_validate(options);
  if (!f.csv.empty()) {
    std::ofstream out(f.csv);
    if (!out) throw InputError("cannot write " + f.csv);
    out << histogram_csv(r);
  }
  if (f.json) {
    std::cout << to_json(r, f.timing).dump(2) << '\n';
  } else {
    std::cout << "n: " << r.n << "\nmode: " << to_string(r.mode) << "\npopulation: " << r.population
              << "\nunmixed: " << r.unmixed_count << "\ncohen-macaulay: " << r.cm_count << "\ntypes:";
    for (const auto& [type, count] : r.type_histogram) std::cout << ' ' << type << ':' << count;
    std::cout << "\nchecks:\n";
    for (const auto& [name, t] : r.checks) {
      std::cout << "  " << name << ": " << t.checked << " checked, " << t.violations << " violations\n";
    }
    for (const auto& v : r.violations) std::cout << "violation #" << v.index << " " << v.check << ": " << v.detail << '\n';
    if (f.timing) std::cout << "runtime_ms: " << r.runtime_ms << '\n';
  }
  return r.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_complex(const Flags& f) {
  const GraphFile file = read_graph_file(f.file);
  const SimplicialComplex delta = complementary_complex(file.graph);
  const Field field = Field::parse(f.field);
  const Verdict pure = is_pure(delta);
  std::optional<Verdict> strongly;
  if (pure.holds()) strongly = is_strongly_connected(delta);
  std::optional<ShellingSearch> shelling;
  std::string shelling_note;
  if (pure.holds()) {
    try {
      shelling = find_shelling(delta);
    } catch (const CapacityError& e) {
      shelling_note = e.what();
    }
  }
  Verdict reisner;
  try {
    reisner = reisner_cm(delta, field);
  } catch (const CapacityError& e) {
    reisner.note = e.what();
  }
  if (f.json) {
    nlohmann::json facets = nlohmann::json::array();
    for (VertexSet s : delta.facets()) facets.push_back(delta.names_of(s));
    nlohmann::json doc = {{"dimension", delta.dimension()}, {"facets", facets}, {"pure", to_json(pure)},
                          {"reisner", to_json(reisner)}};
    doc["strongly_connected"] = strongly ? to_json(*strongly) : nlohmann::json(nullptr);
    if (shelling && shelling->order) {
      nlohmann::json order = nlohmann::json::array();
      for (VertexSet s : *shelling->order) order.push_back(delta.names_of(s));
      doc["shelling"] = order;
    } else {
      doc["shelling"] = nullptr;
    }
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "dimension: " << delta.dimension() << "\nfacets:\n" << format_complex(delta);
    std::cout << "pure: " << summarize(pure) << '\n';
    if (strongly) std::cout << "strongly connected: " << summarize(*strongly) << '\n';
    if (shelling) {
      std::cout << "shellable: " << (shelling->order ? "true" : "false") << '\n';
    } else if (!shelling_note.empty()) {
      std::cout << "shellable: inconclusive (" << shelling_note << ")\n";
    }
    std::cout << "reisner: " << summarize(reisner) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unmixed and Cohen-Macaulay tests for graphs with 2*height = #vertices"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--isa", f.isa, "Linear algebra kernels: scalar or avx2 (default: best available)");

  auto* classify_cmd = app.add_subcommand("classify", "Class membership and labeling");
  classify_cmd->add_option("file", f.file)->required();
  classify_cmd->add_flag("--json", f.json);

  auto* check = app.add_subcommand("check", "Unmixed and Cohen-Macaulay verdicts with certificates");
  check->add_option("file", f.file)->required();
  check->add_flag("--json", f.json);
  check->add_option("--routes", f.routes, "Comma-separated route letters a-f");
  check->add_option("--field", f.field, "Prime p or Q for the homology route");
  check->add_option("--seed", f.seed, "Seed for sampled transform subsets");

  auto* transform = app.add_subcommand("transform", "Apply O_T");
  transform->add_option("file", f.file)->required();
  transform->add_option("--set", f.set, "1-based pair indices, comma-separated")->required();
  transform->add_flag("--json", f.json);

  auto* graft = app.add_subcommand("graft", "Build a B-grafted graph");
  graft->add_option("--h0", f.h0, "Base graph with vertices 1..p")->required();
  graft->add_option("--block", f.blocks, "Block graph file, once per base vertex")->required();
  graft->add_flag("--json", f.json);

  auto* invariants = app.add_subcommand("invariants", "Type, socle, level and Gorenstein data");
  invariants->add_option("file", f.file)->required();
  invariants->add_flag("--list-socle", f.list_socle, "Print socle generators one per line");
  invariants->add_flag("--json", f.json, "Accepted for symmetry; output is JSON already");

  auto* census = app.add_subcommand("census", "Cross-validate every check over labeled class members");
  census->add_option("--n", f.n, "Number of pairs")->required();
  census->add_option("--mode", f.mode, "exhaustive or sample");
  census->add_option("--count", f.count, "Samples in sample mode");
  census->add_option("--seed", f.seed, "Seed (required in sample mode)");
  census->add_option("--csv", f.csv, "Write the type histogram as CSV");
  census->add_option("--threads", f.threads, "Worker threads, 0 = auto");
  census->add_flag("--timing", f.timing, "Include runtime_ms");
  census->add_flag("--json", f.json);

  auto* complex_cmd = app.add_subcommand("complex", "The complementary complex and its properties");
  complex_cmd->add_option("file", f.file)->required();
  complex_cmd->add_option("--field", f.field);
  complex_cmd->add_flag("--json", f.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (!f.isa.empty()) {
      if (f.isa == "scalar") {
        kernels::set_active_isa(kernels::Isa::Scalar);
      } else if (f.isa == "avx2") {
        kernels::set_active_isa(kernels::Isa::Avx2);
      } else {
        throw InputError("unknown --isa '" + f.isa + "'");
      }
    }
    if (classify_cmd->parsed()) return cmd_classify(f);
    if (check->parsed()) return cmd_check(f);
    if (transform->parsed()) return cmd_transform(f);
    if (graft->parsed()) return cmd_graft(f);
    if (invariants->parsed()) return cmd_invariants(f);
    if (census->parsed()) return cmd_census(f);
    if (complex_cmd->parsed()) return cmd_complex(f);
  } catch (const EquivalenceViolation& e) {
    std::cerr << "equivalence violation: " << e.what() << '\n' << e.dump() << '\n';
    return kExitViolation;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
