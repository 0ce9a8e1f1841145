#include "domcol/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <istream>
#include <ostream>
#include <sstream>

#include "domcol/errors.hpp"

namespace domcol {

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int declared_edges = 0;
  Graph g;
  auto fail = [&](const std::string& why) {
    throw UsageError("graph input line " + std::to_string(lineno) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_header) fail("duplicate 'p' line");
      std::string fmt;
      long n = -1, m = -1;
      if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col") || n < 0 || m < 0) {
        fail("expected 'p edge <n> <m>'");
      }
      g = Graph(static_cast<int>(n));
      declared_edges = static_cast<int>(m);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before 'p' line");
      long u = 0, v = 0;
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || u > g.n() || v > g.n()) fail("vertex id out of range");
      if (u == v) fail("self-loop");
      g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw UsageError("graph input: missing 'p edge <n> <m>' line");
  (void)declared_edges;  // duplicates are tolerated, so the count is advisory
  return g;
}

Graph parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

Graph read_graph_file(const std::string& path) {
  if (path == "-") return parse_dimacs(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file: " + path);
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.n() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(out, g);
  return out.str();
}

VertexSet parse_vertex_list(const std::string& text, int n) {
  VertexSet s(n);
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = tok.find_last_not_of(" \t");
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("bad vertex id '" + tok + "'");
    }
    if (used != tok.size() || v < 0 || v >= n) throw UsageError("bad vertex id '" + tok + "'");
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

}  // namespace domcol
