#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kdom/graph.hpp"
#include "kdom/hypergraph.hpp"

namespace kdom {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph text format:
//   c <comment>
//   p graph <n> <m>
//   e <u> <v>          (0 <= u < v < n, one line per edge, m lines)
// The parser rejects wrong edge counts, bad ranges, u >= v and duplicates.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Hypergraph text format:
//   c <comment>
//   p hyp <n> <m>
//   h <v1> <v2> ... <vk>   (k >= 2 distinct vertices, m lines)
// Duplicate edges collapse silently (edges are a set).
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_hypergraph_file(const std::string& path, const Hypergraph& h);

}  // namespace kdom
