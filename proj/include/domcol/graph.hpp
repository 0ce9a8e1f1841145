#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domcol/vertex_set.hpp"

namespace domcol {

enum class Problem { domcol, cdcol };

const char* to_string(Problem p);
Problem parse_problem(const std::string& s);

/// Undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int num_edges() const { return m_; }

  /// Adds {u,v}; repeated edges are ignored. Self-loops and bad ids throw UsageError.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const;
  const VertexSet& neighbors(Vertex v) const;
  VertexSet closed_neighborhood(Vertex v) const;
  int degree(Vertex v) const { return neighbors(v).size(); }

  // Bitmask views, valid only for n <= 64.
  Mask open_mask(Vertex v) const;
  Mask closed_mask(Vertex v) const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Subgraph induced by `keep`, relabelled densely in increasing id order.
  /// If `original_ids` is given it receives new-id -> old-id.
  Graph induced(const VertexSet& keep, std::vector<Vertex>* original_ids = nullptr) const;

  void set_name(Vertex v, std::string name);
  const std::string& name(Vertex v) const;

 private:
  void check(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> names_;
};

struct Coloring {
  std::vector<Color> colors;

  /// Number of distinct colors used (|im(chi)|).
  int num_colors() const;
  /// Colors renamed to 0,1,2,... in order of first appearance.
  Coloring normalized() const;
};

struct DominatorWitness {
  Problem kind = Problem::domcol;
  // DomCol: dominated[v] is the class v dominates.
  std::vector<Color> dominated;
  // CD: dominator[c] is a vertex whose closed neighborhood holds class c.
  std::map<Color, Vertex> dominator;
};

VertexSet closed_neighborhood(const Graph& g, Vertex v);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_cluster_graph(const Graph& g);
bool has_induced_p3(const Graph& g);
bool is_twin_cover(const Graph& g, const VertexSet& m);
bool is_clique_modulator(const Graph& g, const VertexSet& m);
bool is_cvd_set(const Graph& g, const VertexSet& m);
bool is_proper(const Graph& g, const Coloring& c);

std::optional<DominatorWitness> validate_domcol(const Graph& g, const Coloring& c);
std::optional<DominatorWitness> validate_cdcol(const Graph& g, const Coloring& c);
std::optional<DominatorWitness> validate(Problem p, const Graph& g, const Coloring& c);

}  // namespace domcol
