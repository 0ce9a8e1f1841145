#include "domcol/cluster.hpp"

#include "domcol/errors.hpp"

namespace domcol {

ClusterStructure cluster_structure(const Graph& g, const VertexSet& m) {
  if (m.universe() != g.n()) throw UsageError("modulator over wrong vertex range");
  std::vector<Vertex> ids;
  Graph rest = g.induced(m.complement(), &ids);
  if (!is_cluster_graph(rest)) throw UsageError("graph minus the given set is not a cluster graph");
  ClusterStructure cs;
  cs.clique_of.assign(g.n(), -1);
  for (const VertexSet& comp : connected_components(rest)) {
    std::vector<Vertex> clique;
    comp.for_each([&](Vertex v) {
      clique.push_back(ids[v]);
      cs.clique_of[ids[v]] = cs.num_cliques();
    });
    cs.cliques.push_back(std::move(clique));
  }
  return cs;
}

bool is_dominated(const Graph& g, const VertexSet& s) {
  for (Vertex u = 0; u < g.n(); ++u)
    if (s.is_subset_of(g.closed_neighborhood(u))) return true;
  return false;
}

VertexSet common_closed_neighborhood(const Graph& g, const std::vector<Vertex>& who) {
  VertexSet out = VertexSet::full(g.n());
  for (Vertex u : who) out &= g.closed_neighborhood(u);
  return out;
}

bool for_each_modulator_partition(
    const Graph& g, const std::vector<Vertex>& mod, bool require_dominated,
    const std::function<bool(const std::vector<Color>& part, int kappa)>& f) {
  const int k = static_cast<int>(mod.size());
  std::vector<Color> part(k, kUncolored);
  std::vector<VertexSet> parts;

  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) return f(part, static_cast<int>(parts.size()));
    const Vertex v = mod[i];
    for (int c = 0; c <= static_cast<int>(parts.size()); ++c) {
      const bool fresh = c == static_cast<int>(parts.size());
      if (!fresh && g.neighbors(v).intersects(parts[c])) continue;
      if (fresh) parts.emplace_back(g.n());
      parts[c].insert(v);
      if (require_dominated && !is_dominated(g, parts[c])) {
        // A part that is not dominated stays undominated as it grows.
        parts[c].erase(v);
        if (fresh) parts.pop_back();
        continue;
      }
      part[i] = c;
      bool stop = self(self, i + 1);
      part[i] = kUncolored;
      parts[c].erase(v);
      if (fresh) parts.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace domcol
