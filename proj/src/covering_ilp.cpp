#include "domcol/covering_ilp.hpp"

#include <algorithm>

#include "domcol/errors.hpp"

namespace domcol {

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const CoveringILP& ilp)
      : ilp_(ilp), m_(ilp.rows()), k_(ilp.cols()), residual_(ilp.b), x_(k_, 0) {
    // last_col_[i]: the last variable that can still help row i.
    last_col_.assign(m_, -1);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < k_; ++j)
        if (ilp.a[i][j]) last_col_[i] = j;
  }

  IlpSolution run() {
    for (int i = 0; i < m_; ++i)
      if (residual_[i] > 0 && last_col_[i] < 0) return {};
    int upper = 0;
    for (int v : ilp_.b) upper += std::max(v, 0);
    best_ = upper + 1;
    rec(0, 0);
    IlpSolution sol;
    sol.feasible = true;
    sol.optimum = best_;
    sol.x = best_x_;
    return sol;
  }

 private:
  int max_residual() const {
    int r = 0;
    for (int v : residual_) r = std::max(r, v);
    return r;
  }

  void rec(int j, int used) {
    // Each unit of any variable lowers a row's residual by at most one.
    if (used + max_residual() >= best_) return;
    if (j == k_) {
      best_ = used;
      best_x_ = x_;
      return;
    }
    int hi = 0;
    for (int i = 0; i < m_; ++i)
      if (ilp_.a[i][j]) hi = std::max(hi, residual_[i]);
    for (int v = hi; v >= 0; --v) {
      // Rows that no later variable covers must be done after this one.
      bool ok = true;
      for (int i = 0; i < m_ && ok; ++i)
        if (last_col_[i] == j && residual_[i] - v > 0) ok = false;
      if (!ok) break;  // smaller v only leaves more residual
      apply(j, v);
      rec(j + 1, used + v);
      apply(j, -v);
    }
  }

  void apply(int j, int v) {
    x_[j] += v;
    for (int i = 0; i < m_; ++i)
      if (ilp_.a[i][j]) residual_[i] -= v;
  }

  const CoveringILP& ilp_;
  int m_, k_;
  std::vector<int> residual_;
  std::vector<int> x_, best_x_;
  std::vector<int> last_col_;
  int best_ = 0;
};

}  // namespace

IlpSolution solve_covering_ilp(const CoveringILP& ilp) {
  for (const auto& row : ilp.a) {
    if (static_cast<int>(row.size()) != ilp.cols()) throw UsageError("ragged ILP matrix");
    for (int e : row)
      if (e != 0 && e != 1) throw UsageError("ILP matrix must be 0/1");
  }
  if (static_cast<int>(ilp.b.size()) != ilp.rows()) throw UsageError("ILP demand size mismatch");
  return CoverSearch(ilp).run();
}

}  // namespace domcol
