#pragma once

#include <vector>

#include "domcol/graph.hpp"
#include "domcol/tc.hpp"

namespace domcol {

/// Vertices of one clique of G - M that see the same part of M. They are
/// pairwise true twins in G.
struct NeighborhoodClass {
  int clique = 0;
  VertexSet m_neighbors;        // N(v) ∩ M, shared by all members
  std::vector<Vertex> members;  // increasing ids
};

struct NeighborhoodClasses {
  std::vector<std::vector<Vertex>> cliques;
  std::vector<std::vector<NeighborhoodClass>> classes;  // per clique, by smallest member
  std::vector<Vertex> representatives;                  // lowest member of every class, sorted
};

/// Throws UsageError unless G - m is a cluster graph.
NeighborhoodClasses neighborhood_classes(const Graph& g, const VertexSet& m);

/// CD coloring with at most ell colors, m a cluster vertex deletion set.
SolveResult cdcol_cvd(const Graph& g, const VertexSet& m, int ell);

}  // namespace domcol
