#include "nutforge/formats.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace nutforge {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

bool is_blank_or_comment(const std::string& s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0) parse_fail(lineno, "expected header 'n m'");
      std::string rest;
      if (ls >> rest) parse_fail(lineno, "trailing content after header: '" + rest + "'");
      edges.reserve(m);
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) parse_fail(lineno, "expected edge 'u v'");
    std::string rest;
    if (ls >> rest) parse_fail(lineno, "trailing content after edge: '" + rest + "'");
    edges.emplace_back(u, v);
  }
  if (n < 0) fail(Errc::ParseError, "empty input, expected 'n m' header");
  if (static_cast<int>(edges.size()) != m)
    fail(Errc::CountMismatch,
         "header lists " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  try {
    return Graph(n, edges);
  } catch (const Error& e) {
    fail(Errc::ParseError, e.what());
  }
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(const std::string& line) {
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) fail(Errc::ParseError, "empty graph6 string");
  int n = s[0] - 63;
  if (n < 0 || n > 62) fail(Errc::ParseError, "graph6 order byte out of supported range (<= 62)");
  const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  const size_t want = 1 + (nbits + 5) / 6;
  if (s.size() != want)
    fail(Errc::ParseError, "graph6 length " + std::to_string(s.size()) + ", expected " + std::to_string(want));
  std::vector<Edge> edges;
  size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int c = s[1 + bit / 6] - 63;
      if (c < 0 || c > 63) fail(Errc::ParseError, "graph6 byte out of range at offset " + std::to_string(1 + bit / 6));
      if ((c >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Validate any padding bytes too.
  for (size_t k = 1; k < s.size(); ++k)
    if (s[k] < 63 || s[k] > 126) fail(Errc::ParseError, "graph6 byte out of range at offset " + std::to_string(k));
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) fail(Errc::OrderTooLarge, "graph6 writer supports order <= 62");
  std::string out(1, static_cast<char>(63 + n));
  const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  std::string data((nbits + 5) / 6, static_cast<char>(63));
  size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) data[bit / 6] = static_cast<char>(data[bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  return out + data;
}

GraphFormat sniff_format(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    int a, b;
    if (ls >> a >> b) return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
  }
  return GraphFormat::EdgeList;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_list(text);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!is_blank_or_comment(line)) return parse_graph6(line);
  fail(Errc::ParseError, "no graph6 line found");
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format);
}

Graph read_graph_file_auto(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), sniff_format(buf.str()));
}

}  // namespace nutforge
