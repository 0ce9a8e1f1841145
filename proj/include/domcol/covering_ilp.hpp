#pragma once

#include <vector>

namespace domcol {

/// minimize 1·x subject to A x >= b, x >= 0 integer, A a 0/1 matrix.
struct CoveringILP {
  std::vector<std::vector<int>> a;  // rows x columns
  std::vector<int> b;

  int rows() const { return static_cast<int>(a.size()); }
  int cols() const { return a.empty() ? 0 : static_cast<int>(a[0].size()); }
};

struct IlpSolution {
  bool feasible = false;
  int optimum = 0;
  std::vector<int> x;
};

/// Exact branch and bound. A row with positive demand and no 1 entry makes the
/// program infeasible.
IlpSolution solve_covering_ilp(const CoveringILP& ilp);

}  // namespace domcol
