#pragma once

#include <vector>

#include "domcol/graph.hpp"

namespace domcol {

/// G plus a new vertex (id n) adjacent to every old vertex.
Graph add_universal_vertex(const Graph& g);

/// Universe {0..universe-1}; family members are lists of element ids.
struct HittingSetInstance {
  int universe = 0;
  std::vector<std::vector<int>> family;
  int budget = 0;
};

struct HittingSetReduction {
  Graph graph;
  int ell = 0;
  VertexSet cvd_set;
};

/// Builds the DomCol instance whose answer at ell = n + 2 equals the hitting
/// set answer. Vertex layout: the element clique Q1 (ids 0..n-1), a second
/// clique Q2 of n - budget vertices, the two hubs m1 and m2, then one vertex per
/// distinct family member in first-occurrence order.
HittingSetReduction hitting_set_to_domcol(const HittingSetInstance& hs);

}  // namespace domcol
