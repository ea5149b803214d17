#include "cmg/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "cmg/errors.hpp"

namespace cmg {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw InputError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

GraphFile parse_graph_text(std::string_view text) {
  std::vector<std::string> order;
  std::set<std::string> declared;
  std::vector<NamedEdge> edges;
  GraphFile out;

  auto declare = [&](std::string_view name) {
    auto [it, fresh] = declared.emplace(name);
    if (fresh) order.emplace_back(name);
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view cmd = words[0];
    if (cmd == "vertex") {
      if (words.size() != 2) fail(line_no, "expected 'vertex <name>'");
      declare(words[1]);
    } else if (cmd == "edge") {
      if (words.size() != 3) fail(line_no, "expected 'edge <a> <b>'");
      if (words[1] == words[2]) fail(line_no, "loop at vertex '" + std::string(words[1]) + "'");
      declare(words[1]);
      declare(words[2]);
      edges.emplace_back(std::string(words[1]), std::string(words[2]));
    } else if (cmd == "pairs") {
      if (words.size() != 2) fail(line_no, "expected 'pairs <n>'");
      std::size_t n = 0;
      auto [p, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), n);
      if (ec != std::errc{} || p != words[1].data() + words[1].size() || n == 0) {
        fail(line_no, "'pairs' needs a positive integer");
      }
      if (2 * n > Graph::kMaxVertices) fail(line_no, "too many pairs");
      for (std::size_t i = 1; i <= n; ++i) declare("x" + std::to_string(i));
      for (std::size_t i = 1; i <= n; ++i) declare("y" + std::to_string(i));
      for (std::size_t i = 1; i <= n; ++i) {
        NamedEdge e{"x" + std::to_string(i), "y" + std::to_string(i)};
        edges.push_back(e);
        out.pairs.push_back(e);
      }
    } else if (cmd == "pair") {
      if (words.size() != 3) fail(line_no, "expected 'pair <x> <y>'");
      if (words[1] == words[2]) fail(line_no, "a vertex cannot be paired with itself");
      declare(words[1]);
      declare(words[2]);
      NamedEdge e{std::string(words[1]), std::string(words[2])};
      edges.push_back(e);
      out.pairs.push_back(e);
    } else if (cmd == "part") {
      if (words.size() < 3 || (words[1] != "X" && words[1] != "Y")) fail(line_no, "expected 'part X|Y <name>...'");
      auto& side = words[1] == "X" ? out.x_side : out.y_side;
      for (std::size_t k = 2; k < words.size(); ++k) {
        declare(words[k]);
        side.emplace_back(words[k]);
      }
    } else {
      fail(line_no, "unknown directive '" + std::string(cmd) + "'");
    }
    if (end == text.size()) break;
  }

  out.graph = Graph(std::move(order), edges);
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphFile read_graph_file(const std::filesystem::path& path) {
  try {
    return parse_graph_text(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_graph(const Graph& g) {
  std::string out;
  out += "# " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges\n";
  for (const auto& name : g.names()) out += "vertex " + name + "\n";
  for (const auto& [a, b] : g.named_edges()) out += "edge " + a + " " + b + "\n";
  return out;
}

std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += kHex[(h >> shift) & 0xF];
  return out;
}

}  // namespace cmg
