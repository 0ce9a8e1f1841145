#pragma once

// Graph builders and brute-force checkers shared by the unit tests. The
// checkers expand the definitions literally and do not call the library
// validators, so they can serve as an independent reference.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "domcol/graph.hpp"

namespace testing {

using domcol::Color;
using domcol::Coloring;
using domcol::Graph;
using domcol::Vertex;
using domcol::VertexSet;

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Every labelled graph on n vertices, by edge bitmask.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& f) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  for (unsigned long m = 0; m < (1ul << slots.size()); ++m) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (m >> i & 1) g.add_edge(slots[i].first, slots[i].second);
    f(g);
  }
}

inline bool connected(const Graph& g) { return domcol::connected_components(g).size() <= 1; }

/// Every map V -> {0..palette-1}.
inline void for_each_coloring(int n, int palette, const std::function<void(const Coloring&)>& f) {
  Coloring c;
  c.colors.assign(n, 0);
  while (true) {
    f(c);
    int i = 0;
    while (i < n && ++c.colors[i] == palette) c.colors[i++] = 0;
    if (i == n) return;
  }
}

inline bool in_closed_nbhd(const Graph& g, Vertex v, Vertex u) { return u == v || g.adjacent(u, v); }

inline bool naive_proper(const Graph& g, const Coloring& c) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (g.adjacent(u, v) && c.colors[u] == c.colors[v]) return false;
  return true;
}

/// True iff class `col` is nonempty and inside N[v].
inline bool naive_dominates(const Graph& g, const Coloring& c, Vertex v, Color col) {
  bool any = false;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (c.colors[u] != col) continue;
    any = true;
    if (!in_closed_nbhd(g, v, u)) return false;
  }
  return any;
}

inline bool naive_domcol(const Graph& g, const Coloring& c) {
  if (!naive_proper(g, c)) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    bool ok = false;
    for (Vertex u = 0; u < g.n() && !ok; ++u) ok = naive_dominates(g, c, v, c.colors[u]);
    if (!ok) return false;
  }
  return true;
}

inline bool naive_cdcol(const Graph& g, const Coloring& c) {
  if (!naive_proper(g, c)) return false;
  for (Vertex u = 0; u < g.n(); ++u) {
    bool ok = false;
    for (Vertex v = 0; v < g.n() && !ok; ++v) ok = naive_dominates(g, c, v, c.colors[u]);
    if (!ok) return false;
  }
  return true;
}

inline bool naive_valid(domcol::Problem p, const Graph& g, const Coloring& c) {
  return p == domcol::Problem::domcol ? naive_domcol(g, c) : naive_cdcol(g, c);
}

inline std::vector<std::pair<Vertex, Vertex>> true_twin_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (g.adjacent(u, v) && g.closed_neighborhood(u) == g.closed_neighborhood(v)) out.emplace_back(u, v);
  return out;
}

/// Random subset of {0..n-1} with exactly k members.
inline VertexSet random_subset(int n, int k, std::mt19937_64& rng) {
  std::vector<Vertex> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(k);
  return VertexSet::of(n, ids);
}

/// Least number of colors in a CD coloring that keeps `chi` on the colored
/// vertices and gives the uncolored ones only colors unused by `chi`; -1 if
/// none exists. Enumerates set partitions of the uncolored vertices.
inline int brute_min_disjoint_extension(const Graph& g, const std::vector<Color>& chi) {
  std::vector<Vertex> open;
  Color next = 0;
  std::vector<Color> used;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (chi[v] < 0) {
      open.push_back(v);
    } else {
      next = std::max(next, chi[v] + 1);
      if (std::find(used.begin(), used.end(), chi[v]) == used.end()) used.push_back(chi[v]);
    }
  }
  const int base = static_cast<int>(used.size());
  int best = -1;
  Coloring c{chi};
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int blocks) {
    if (best >= 0 && base + blocks >= best) return;
    if (i == open.size()) {
      if (naive_cdcol(g, c)) best = base + blocks;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      c.colors[open[i]] = next + b;
      go(i + 1, std::max(blocks, b + 1));
    }
    c.colors[open[i]] = -1;
  };
  go(0, 0);
  return best;
}

/// Colors M plus a random set of other vertices so that the coloring is proper
/// and every class is dominated. Falls back to singleton classes.
inline std::vector<Color> random_partial_cd(const Graph& g, const VertexSet& m, std::mt19937_64& rng) {
  const int n = g.n();
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Color> chi(n, -1);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (m.contains(v) || rng() % 3 == 0) s.push_back(v);
    const int palette = std::max<int>(1, static_cast<int>(s.size()));
    for (Vertex v : s) chi[v] = static_cast<Color>(rng() % palette);
    Coloring whole{chi};
    bool ok = true;
    for (Vertex u : s) {
      for (Vertex v : s)
        if (u < v && g.adjacent(u, v) && chi[u] == chi[v]) ok = false;
      bool dom = false;
      for (Vertex d = 0; d < n && !dom; ++d) dom = naive_dominates(g, whole, d, chi[u]);
      ok = ok && dom;
    }
    if (ok) return chi;
  }
  std::vector<Color> chi(n, -1);
  Color next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (m.contains(v)) chi[v] = next++;
  return chi;
}

}  // namespace testing
