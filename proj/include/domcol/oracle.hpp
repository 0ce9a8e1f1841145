#pragma once

#include <optional>
#include <vector>

#include "domcol/graph.hpp"

namespace domcol {

struct ColoringWitness {
  Coloring coloring;
  DominatorWitness witness;
};

struct OracleAnswer {
  int optimum = 0;
  Coloring coloring;
  DominatorWitness witness;
};

// Brute force over set partitions (restricted-growth strings) of V. Guarded by
// Guards::oracle_max_n; GuardExceeded otherwise.
OracleAnswer domcol_optimum(const Graph& g);
OracleAnswer cdcol_optimum(const Graph& g);
OracleAnswer optimum(Problem p, const Graph& g);

// Threshold versions: a valid coloring with at most ell colors, if any.
std::optional<ColoringWitness> domcol_at_most(const Graph& g, int ell);
std::optional<ColoringWitness> cdcol_at_most(const Graph& g, int ell);
std::optional<ColoringWitness> at_most(Problem p, const Graph& g, int ell);

int chromatic_number(const Graph& g);
int max_clique_size(const Graph& g);

/// Proper coloring with chi(v) in lists[v], if one exists. Guard: list_oracle_max_n.
std::optional<Coloring> list_coloring_oracle(const Graph& g,
                                             const std::vector<std::vector<Color>>& lists);

/// Elements are 0-based ids in [0, universe). An empty member can never be hit.
/// Guard: hitting_set_max_universe.
bool hitting_set_oracle(int universe, const std::vector<std::vector<int>>& family, int kappa);

}  // namespace domcol
