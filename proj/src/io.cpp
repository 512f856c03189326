#include "kdom/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace kdom {

namespace {

// Reads lines, skipping comments and blank lines.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == 'c') continue;
    return true;
  }
  return false;
}

std::pair<int, int> parse_header(const std::string& line, const std::string& kind) {
  std::istringstream ss(line);
  std::string p, word;
  int n = 0, m = 0;
  if (!(ss >> p >> word >> n >> m) || p != "p" || word != kind)
    throw ParseError("expected header 'p " + kind + " <n> <m>', got: " + line);
  if (n < 0 || m < 0) throw ParseError("negative count in header");
  std::string rest;
  if (ss >> rest) throw ParseError("trailing tokens in header: " + line);
  return {n, m};
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("empty graph file");
  auto [n, m] = parse_header(line, "graph");
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < m; ++i) {
    if (!next_content_line(in, line))
      throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                       std::to_string(i));
    std::istringstream ss(line);
    std::string tag;
    int u = 0, v = 0;
    if (!(ss >> tag >> u >> v) || tag != "e")
      throw ParseError("expected 'e <u> <v>', got: " + line);
    std::string rest;
    if (ss >> rest) throw ParseError("trailing tokens in edge line: " + line);
    if (u < 0 || v >= n || u >= v)
      throw ParseError("edge endpoints must satisfy 0 <= u < v < n: " + line);
    if (!seen.insert({u, v}).second) throw ParseError("duplicate edge: " + line);
    edges.emplace_back(u, v);
  }
  if (next_content_line(in, line)) throw ParseError("unexpected extra line: " + line);
  return Graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto edges = g.edge_list();
  out << "p graph " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("empty hypergraph file");
  auto [n, m] = parse_header(line, "hyp");
  std::vector<VertexSet> edges;
  for (int i = 0; i < m; ++i) {
    if (!next_content_line(in, line))
      throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                       std::to_string(i));
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag != "h")
      throw ParseError("expected 'h <v1> <v2> ...', got: " + line);
    VertexSet e;
    int v = 0;
    int listed = 0;
    while (ss >> v) {
      if (v < 0 || v >= n) throw ParseError("hyperedge vertex out of range: " + line);
      if (e.contains(v)) throw ParseError("repeated vertex in hyperedge: " + line);
      e.add(v);
      ++listed;
    }
    if (!ss.eof()) throw ParseError("bad token in hyperedge line: " + line);
    if (listed < 2) throw ParseError("hyperedges need at least 2 vertices: " + line);
    edges.push_back(e);
  }
  if (next_content_line(in, line)) throw ParseError("unexpected extra line: " + line);
  return Hypergraph(n, std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "p hyp " << h.order() << ' ' << h.edge_count() << '\n';
  for (const VertexSet& e : h.edges()) {
    out << 'h';
    for (int v : e) out << ' ' << v;
    out << '\n';
  }
}

namespace {

template <class Reader>
auto read_file(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return reader(in);
}

template <class T, class Writer>
void write_file(const std::string& path, const T& value, Writer writer) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  writer(out, value);
}

}  // namespace

Graph read_graph_file(const std::string& path) {
  return read_file(path, [](std::istream& in) { return read_graph(in); });
}

void write_graph_file(const std::string& path, const Graph& g) {
  write_file(path, g, [](std::ostream& out, const Graph& x) { write_graph(out, x); });
}

Hypergraph read_hypergraph_file(const std::string& path) {
  return read_file(path, [](std::istream& in) { return read_hypergraph(in); });
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h) {
  write_file(path, h,
             [](std::ostream& out, const Hypergraph& x) { write_hypergraph(out, x); });
}

}  // namespace kdom
