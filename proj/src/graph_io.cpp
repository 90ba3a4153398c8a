#include "cycleminor/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cycleminor {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<long long> parse_ints(std::string_view line, int lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError("line " + std::to_string(lineno) + ": expected integers");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto nums = parse_ints(line, lineno);
    if (!g) {
      if (nums.size() != 1 || nums[0] < 0) throw ParseError("line " + std::to_string(lineno) + ": malformed header");
      g.emplace(static_cast<int>(nums[0]));
      continue;
    }
    if (nums.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
    const long long n = g->num_vertices();
    if (nums[0] < 0 || nums[1] < 0 || nums[0] >= n || nums[1] >= n) {
      throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
    }
    try {
      g->add_edge(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
    } catch (const GraphError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!g) throw ParseError("missing vertex-count header");
  return *g;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  std::vector<int> bytes;
  for (char ch : text) {
    int b = static_cast<unsigned char>(ch);
    if (b < 63 || b > 126) throw ParseError("graph6: byte out of range");
    bytes.push_back(b - 63);
  }
  if (bytes.empty()) throw ParseError("graph6: empty input");
  std::size_t idx = 0;
  long long n = 0;
  if (bytes[0] != 63) {
    n = bytes[0];
    idx = 1;
  } else if (bytes.size() >= 2 && bytes[1] != 63) {
    if (bytes.size() < 4) throw ParseError("graph6: truncated size");
    n = (bytes[1] << 12) | (bytes[2] << 6) | bytes[3];
    idx = 4;
  } else {
    if (bytes.size() < 8) throw ParseError("graph6: truncated size");
    for (int k = 2; k < 8; ++k) n = (n << 6) | bytes[k];
    idx = 8;
  }
  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (bytes.size() - idx != need) throw ParseError("graph6: wrong body length");
  Graph g(static_cast<int>(n));
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = bytes[idx + static_cast<std::size_t>(k / 6)];
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  const long long n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist" || name == "edge-list") return GraphFormat::EdgeList;
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  throw ParseError("unknown graph format: " + std::string(name));
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Graph6) return serialize_graph6(g) + "\n";
  std::ostringstream out;
  out << g.num_vertices() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format);
}

}  // namespace cycleminor
