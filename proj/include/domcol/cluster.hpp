#pragma once

#include <functional>
#include <vector>

#include "domcol/graph.hpp"

namespace domcol {

/// Cliques of G - M, in original vertex ids, ordered by smallest member.
struct ClusterStructure {
  std::vector<std::vector<Vertex>> cliques;
  std::vector<int> clique_of;  // vertex -> clique index, -1 for modulator vertices

  int num_cliques() const { return static_cast<int>(cliques.size()); }
};

/// Throws UsageError unless G - m is a cluster graph.
ClusterStructure cluster_structure(const Graph& g, const VertexSet& m);

/// Enumerates partitions of `mod` into independent parts as restricted-growth
/// strings: part[i] is the part of mod[i], parts numbered 0..kappa-1 in order of
/// first appearance. With `require_dominated`, every part must also lie inside
/// some closed neighborhood of g. Stops early once f returns true; the return
/// value says whether it stopped.
bool for_each_modulator_partition(
    const Graph& g, const std::vector<Vertex>& mod, bool require_dominated,
    const std::function<bool(const std::vector<Color>& part, int kappa)>& f);

/// Closed-neighborhood intersection of `who`; the whole vertex set if empty.
VertexSet common_closed_neighborhood(const Graph& g, const std::vector<Vertex>& who);

/// True iff some vertex of g has `s` inside its closed neighborhood.
bool is_dominated(const Graph& g, const VertexSet& s);

}  // namespace domcol
