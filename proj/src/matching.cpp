#include "domcol/matching.hpp"

#include <limits>
#include <queue>

namespace domcol {

namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(int left, int right, const std::vector<std::vector<int>>& adj)
      : left_(left), adj_(adj), dist_(left), ml_(left, -1), mr_(right, -1) {}

  Matching run() {
    int size = 0;
    while (bfs()) {
      for (int u = 0; u < left_; ++u)
        if (ml_[u] < 0 && dfs(u)) ++size;
    }
    return Matching{size, ml_, mr_};
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    for (int u = 0; u < left_; ++u) {
      dist_[u] = ml_[u] < 0 ? 0 : kInf;
      if (ml_[u] < 0) q.push(u);
    }
    bool found = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj_[u]) {
        int w = mr_[v];
        if (w < 0) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj_[u]) {
      int w = mr_[v];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        ml_[u] = v;
        mr_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  int left_;
  const std::vector<std::vector<int>>& adj_;
  std::vector<int> dist_, ml_, mr_;
};

}  // namespace

Matching max_bipartite_matching(int left, int right, const std::vector<std::vector<int>>& adj) {
  return HopcroftKarp(left, right, adj).run();
}

}  // namespace domcol
