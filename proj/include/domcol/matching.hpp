#pragma once

#include <vector>

namespace domcol {

struct Matching {
  int size = 0;
  std::vector<int> match_left;   // left -> right, or -1
  std::vector<int> match_right;  // right -> left, or -1
};

/// Hopcroft-Karp maximum matching. adj[l] lists right vertices adjacent to l.
Matching max_bipartite_matching(int left, int right, const std::vector<std::vector<int>>& adj);

}  // namespace domcol
