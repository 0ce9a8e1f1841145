#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "domcol/covering_ilp.hpp"
#include "domcol/graph.hpp"

namespace domcol {

/// A coloring of `colored` plus a domination commitment delta(v) for every
/// vertex: the class delta(v) is nonempty and lies inside N[v].
struct PartialDominatorColoring {
  VertexSet colored;
  std::vector<Color> chi;    // kUncolored outside `colored`
  std::vector<Color> delta;  // total

  int num_colors() const;
};

/// A coloring of `colored` in which every used class is dominated.
struct PartialCDColoring {
  VertexSet colored;
  std::vector<Color> chi;

  int num_colors() const;
};

struct SolveResult {
  bool answer = false;
  std::optional<Coloring> witness;  // present on yes answers
};

/// Proper list coloring of a cluster graph by one bipartite matching per clique.
std::optional<Coloring> list_coloring_cluster(const Graph& h,
                                              const std::vector<std::vector<Color>>& lists);

/// Throws UsageError when pdc breaks its invariants or does not color all of m.
void check_partial_dominator_coloring(const Graph& g, const VertexSet& m,
                                      const PartialDominatorColoring& pdc);

/// A full dominator coloring with at most ell colors that agrees with pdc on
/// the colored vertices and keeps every commitment delta, if one exists.
std::optional<Coloring> extend_domcol(const Graph& g, const VertexSet& m,
                                      const PartialDominatorColoring& pdc, int ell);

/// Streams the candidate family for a twin cover m; f returning true stops the
/// walk (and the function then returns true).
bool for_each_gamma_domcol(const Graph& g, const VertexSet& m,
                           const std::function<bool(const PartialDominatorColoring&)>& f);
std::vector<PartialDominatorColoring> gamma_domcol(const Graph& g, const VertexSet& m);

SolveResult domcol_tc(const Graph& g, const VertexSet& m, int ell);

struct ReducedInstance {
  Graph graph;
  VertexSet modulator;
  int ell = 0;
  std::vector<Vertex> kept;     // new id -> original id
  std::vector<Vertex> removed;  // original ids of removed clique vertices
};

/// Drops every clique of G - m that has no neighbor in m; each of its vertices
/// needs a color of its own, so ell shrinks by the number removed.
ReducedInstance remove_isolated_cliques(const Graph& g, const VertexSet& m, int ell);

struct CdExtension {
  bool answer = false;
  int ell_prime = 0;  // colors already used by the partial coloring
  IlpSolution ilp;    // ilp.optimum is the least number of new colors
  std::optional<Coloring> coloring;
};

/// Covering program for the uncolored cluster vertices: one row per clique,
/// one column per vertex of m, A(i,j) = 1 iff m_j is adjacent to the clique.
CoveringILP cdcol_extension_ilp(const Graph& g, const VertexSet& m, const PartialCDColoring& pcd);

/// Best disjoint extension (only brand-new colors on uncolored vertices) of pcd;
/// answer is ell_prime + optimum <= ell. Requires m to be a twin cover with no
/// isolated cliques.
CdExtension extend_cdcol_disjoint(const Graph& g, const VertexSet& m, const PartialCDColoring& pcd,
                                  int ell);

bool for_each_gamma_cdcol(const Graph& g, const VertexSet& m,
                          const std::function<bool(const PartialCDColoring&)>& f);
std::vector<PartialCDColoring> gamma_cdcol(const Graph& g, const VertexSet& m);

SolveResult cdcol_tc(const Graph& g, const VertexSet& m, int ell);

/// Lifts a coloring of a reduced instance back to the original graph, giving
/// each removed vertex a fresh color.
Coloring lift_coloring(const ReducedInstance& red, const Coloring& c, int original_n);

}  // namespace domcol
