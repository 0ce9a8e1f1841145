#include "domcol/params.hpp"

#include <functional>
#include <vector>

#include "domcol/errors.hpp"

namespace domcol {

const char* to_string(ParamKind k) {
  switch (k) {
    case ParamKind::twin_cover: return "twin_cover";
    case ParamKind::clique_modulator: return "clique_modulator";
    case ParamKind::cvd_set: return "cvd_set";
  }
  return "?";
}

namespace {

// Returns the vertices one of which must be deleted to destroy some obstruction
// in G - x, or an empty list when G - x is already obstruction free.
using ObstructionFn = std::function<std::vector<Vertex>(const VertexSet& x)>;

class DeletionSearch {
 public:
  DeletionSearch(int n, ObstructionFn obs) : n_(n), obs_(std::move(obs)) {}

  // Is there a set D with chosen ⊆ D, D ∩ banned = ∅, |D| <= |chosen| + budget?
  bool exists(VertexSet& chosen, const VertexSet& banned, int budget) const {
    std::vector<Vertex> cand = obs_(chosen);
    if (cand.empty()) return true;
    if (budget == 0) return false;
    for (Vertex v : cand) {
      if (banned.contains(v)) continue;
      chosen.insert(v);
      bool ok = exists(chosen, banned, budget - 1);
      chosen.erase(v);
      if (ok) return true;
    }
    return false;
  }

  std::optional<VertexSet> solve(int budget) const {
    if (budget < 0) budget = n_;
    VertexSet none(n_);
    int best = -1;
    for (int s = 0; s <= budget; ++s) {
      VertexSet chosen(n_);
      if (exists(chosen, none, s)) {
        best = s;
        break;
      }
    }
    if (best < 0) return std::nullopt;

    // Self-reduction towards the lexicographically smallest optimum.
    VertexSet chosen(n_), banned(n_);
    for (Vertex v = 0; v < n_ && chosen.size() < best; ++v) {
      chosen.insert(v);
      if (exists(chosen, banned, best - chosen.size())) continue;
      chosen.erase(v);
      banned.insert(v);
    }
    return chosen;
  }

 private:
  int n_;
  ObstructionFn obs_;
};

ParamResult make_result(ParamKind kind, VertexSet s) {
  int k = s.size();
  return ParamResult{kind, std::move(s), k};
}

}  // namespace

std::optional<ParamResult> find_clique_modulator(const Graph& g, int budget) {
  // Non-edge inside G - x: one endpoint must go (vertex cover of the complement).
  DeletionSearch search(g.n(), [&g](const VertexSet& x) -> std::vector<Vertex> {
    for (Vertex u = 0; u < g.n(); ++u) {
      if (x.contains(u)) continue;
      for (Vertex v = u + 1; v < g.n(); ++v)
        if (!x.contains(v) && !g.adjacent(u, v)) return {u, v};
    }
    return {};
  });
  auto s = search.solve(budget);
  if (!s) return std::nullopt;
  return make_result(ParamKind::clique_modulator, std::move(*s));
}

std::optional<ParamResult> find_cvd_set(const Graph& g, int budget) {
  DeletionSearch search(g.n(), [&g](const VertexSet& x) -> std::vector<Vertex> {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (x.contains(v)) continue;
      std::vector<Vertex> nb = (g.neighbors(v) - x).members();
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (!g.adjacent(nb[i], nb[j])) return {nb[i], v, nb[j]};
    }
    return {};
  });
  auto s = search.solve(budget);
  if (!s) return std::nullopt;
  return make_result(ParamKind::cvd_set, std::move(*s));
}

std::optional<ParamResult> find_twin_cover(const Graph& g, int budget) {
  // Edges between true twins never need covering; every other edge does.
  std::vector<std::pair<Vertex, Vertex>> need;
  for (auto [u, v] : g.edges())
    if (!(g.closed_neighborhood(u) == g.closed_neighborhood(v))) need.emplace_back(u, v);
  DeletionSearch search(g.n(), [need](const VertexSet& x) -> std::vector<Vertex> {
    for (auto [u, v] : need)
      if (!x.contains(u) && !x.contains(v)) return {u, v};
    return {};
  });
  auto s = search.solve(budget);
  if (!s) return std::nullopt;
  return make_result(ParamKind::twin_cover, std::move(*s));
}

std::optional<ParamResult> find_param(ParamKind kind, const Graph& g, int budget) {
  switch (kind) {
    case ParamKind::twin_cover: return find_twin_cover(g, budget);
    case ParamKind::clique_modulator: return find_clique_modulator(g, budget);
    case ParamKind::cvd_set: return find_cvd_set(g, budget);
  }
  throw UsageError("unknown parameter kind");
}

bool satisfies(ParamKind kind, const Graph& g, const VertexSet& m) {
  switch (kind) {
    case ParamKind::twin_cover: return is_twin_cover(g, m);
    case ParamKind::clique_modulator: return is_clique_modulator(g, m);
    case ParamKind::cvd_set: return is_cvd_set(g, m);
  }
  return false;
}

}  // namespace domcol
