#include "domcol/graph.hpp"

#include <algorithm>
#include <set>

#include "domcol/errors.hpp"

namespace domcol {

const char* to_string(Problem p) { return p == Problem::domcol ? "domcol" : "cdcol"; }

Problem parse_problem(const std::string& s) {
  if (s == "domcol") return Problem::domcol;
  if (s == "cdcol") return Problem::cdcol;
  throw UsageError("unknown problem '" + s + "' (expected domcol or cdcol)");
}

Graph::Graph(int n) : n_(n), adj_(n, VertexSet(n)), names_(n) {
  if (n < 0) throw UsageError("negative vertex count");
}

void Graph::check(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw UsageError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v)) return;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++m_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return adj_[u].contains(v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check(v);
  return adj_[v];
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

Mask Graph::open_mask(Vertex v) const { return neighbors(v).to_mask(); }

Mask Graph::closed_mask(Vertex v) const { return open_mask(v) | bit(v); }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    adj_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<Vertex>* original_ids) const {
  std::vector<Vertex> ids = keep.members();
  std::vector<Vertex> new_id(n_, -1);
  for (std::size_t i = 0; i < ids.size(); ++i) new_id[ids[i]] = static_cast<Vertex>(i);
  Graph h(static_cast<int>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    h.names_[i] = names_[ids[i]];
    adj_[ids[i]].for_each([&](Vertex w) {
      if (new_id[w] > static_cast<Vertex>(i)) h.add_edge(static_cast<Vertex>(i), new_id[w]);
    });
  }
  if (original_ids) *original_ids = std::move(ids);
  return h;
}

void Graph::set_name(Vertex v, std::string name) {
  check(v);
  names_[v] = std::move(name);
}

const std::string& Graph::name(Vertex v) const {
  check(v);
  return names_[v];
}

int Coloring::num_colors() const {
  std::set<Color> used(colors.begin(), colors.end());
  used.erase(kUncolored);
  return static_cast<int>(used.size());
}

Coloring Coloring::normalized() const {
  std::map<Color, Color> rename;
  Coloring out;
  out.colors.reserve(colors.size());
  for (Color c : colors) {
    if (c == kUncolored) {
      out.colors.push_back(kUncolored);
      continue;
    }
    auto [it, fresh] = rename.emplace(c, static_cast<Color>(rename.size()));
    out.colors.push_back(it->second);
  }
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) { return g.closed_neighborhood(v); }

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && !s.is_subset_of(g.closed_neighborhood(v))) ok = false;
  });
  return ok;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen(g.n());
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.n());
    std::vector<Vertex> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      g.neighbors(v).for_each([&](Vertex w) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      });
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_cluster_graph(const Graph& g) {
  for (const VertexSet& c : connected_components(g))
    if (!is_clique(g, c)) return false;
  return true;
}

bool has_induced_p3(const Graph& g) {
  // Look for a center v with two non-adjacent neighbors.
  for (Vertex v = 0; v < g.n(); ++v) {
    std::vector<Vertex> nb = g.neighbors(v).members();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.adjacent(nb[i], nb[j])) return true;
  }
  return false;
}

bool is_twin_cover(const Graph& g, const VertexSet& m) {
  for (auto [u, v] : g.edges()) {
    if (m.contains(u) || m.contains(v)) continue;
    if (!(g.closed_neighborhood(u) == g.closed_neighborhood(v))) return false;
  }
  return true;
}

bool is_clique_modulator(const Graph& g, const VertexSet& m) { return is_clique(g, m.complement()); }

bool is_cvd_set(const Graph& g, const VertexSet& m) {
  return is_cluster_graph(g.induced(m.complement()));
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.n()) return false;
  for (Color col : c.colors)
    if (col < 0) return false;
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

namespace {

std::map<Color, VertexSet> color_classes(const Graph& g, const Coloring& c) {
  std::map<Color, VertexSet> classes;
  for (Vertex v = 0; v < g.n(); ++v) {
    auto it = classes.try_emplace(c.colors[v], g.n()).first;
    it->second.insert(v);
  }
  return classes;
}

}  // namespace

std::optional<DominatorWitness> validate_domcol(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) return std::nullopt;
  auto classes = color_classes(g, c);
  DominatorWitness w;
  w.kind = Problem::domcol;
  w.dominated.assign(g.n(), kUncolored);
  for (Vertex v = 0; v < g.n(); ++v) {
    VertexSet nv = g.closed_neighborhood(v);
    for (const auto& [col, cls] : classes) {
      if (cls.is_subset_of(nv)) {
        w.dominated[v] = col;
        break;
      }
    }
    if (w.dominated[v] == kUncolored) return std::nullopt;
  }
  return w;
}

std::optional<DominatorWitness> validate_cdcol(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) return std::nullopt;
  auto classes = color_classes(g, c);
  DominatorWitness w;
  w.kind = Problem::cdcol;
  for (const auto& [col, cls] : classes) {
    bool found = false;
    for (Vertex u = 0; u < g.n() && !found; ++u) {
      if (cls.is_subset_of(g.closed_neighborhood(u))) {
        w.dominator[col] = u;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return w;
}

std::optional<DominatorWitness> validate(Problem p, const Graph& g, const Coloring& c) {
  return p == Problem::domcol ? validate_domcol(g, c) : validate_cdcol(g, c);
}

}  // namespace domcol
