#include "domcol/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "domcol/errors.hpp"

namespace domcol {

InstanceKind parse_instance_kind(const std::string& s) {
  if (s == "cluster-plus-modulator" || s == "clq") return InstanceKind::cluster_plus_modulator;
  if (s == "twin-cover" || s == "tc") return InstanceKind::twin_cover;
  if (s == "cvd") return InstanceKind::cvd;
  if (s == "gnp") return InstanceKind::gnp;
  throw UsageError("unknown instance kind '" + s + "'");
}

const char* to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::cluster_plus_modulator: return "cluster-plus-modulator";
    case InstanceKind::twin_cover: return "twin-cover";
    case InstanceKind::cvd: return "cvd";
    case InstanceKind::gnp: return "gnp";
  }
  return "?";
}

namespace {

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

GeneratedInstance generate(const InstanceGenSpec& spec, std::mt19937_64& rng) {
  if (spec.p < 0 || spec.p > 1) throw UsageError("edge probability must lie in [0,1]");
  if (spec.kind == InstanceKind::gnp) {
    if (spec.n < 0) throw UsageError("negative vertex count");
    Graph g(spec.n);
    for (Vertex u = 0; u < spec.n; ++u)
      for (Vertex v = u + 1; v < spec.n; ++v)
        if (coin(rng, spec.p)) g.add_edge(u, v);
    return {std::move(g), VertexSet(spec.n)};
  }
  if (spec.cliques < 0 || spec.k < 0 || spec.min_clique < 1 || spec.max_clique < spec.min_clique) {
    throw UsageError("bad clique/modulator sizes");
  }

  std::uniform_int_distribution<int> size_dist(spec.min_clique, spec.max_clique);
  std::vector<std::vector<Vertex>> cliques;
  int n = 0;
  for (int i = 0; i < spec.cliques; ++i) {
    int s = size_dist(rng);
    std::vector<Vertex> q(s);
    std::iota(q.begin(), q.end(), n);
    n += s;
    cliques.push_back(std::move(q));
  }
  const int first_mod = n;
  n += spec.k;

  // Edges are decided on planted ids, then relabelled by a random permutation.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& q : cliques)
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = a + 1; b < q.size(); ++b) edges.emplace_back(q[a], q[b]);
  for (Vertex u = first_mod; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng, spec.p)) edges.emplace_back(u, v);
  for (Vertex u = first_mod; u < n; ++u) {
    for (const auto& q : cliques) {
      if (spec.kind == InstanceKind::twin_cover) {
        if (coin(rng, spec.p))
          for (Vertex v : q) edges.emplace_back(u, v);
      } else {
        for (Vertex v : q)
          if (coin(rng, spec.p)) edges.emplace_back(u, v);
      }
    }
  }

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (spec.shuffle) std::shuffle(perm.begin(), perm.end(), rng);
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(perm[u], perm[v]);
  VertexSet mod(n);
  for (Vertex u = first_mod; u < n; ++u) mod.insert(perm[u]);

  bool ok = spec.kind == InstanceKind::twin_cover ? is_twin_cover(g, mod) : is_cvd_set(g, mod);
  if (spec.kind == InstanceKind::cluster_plus_modulator && spec.cliques == 1) {
    ok = ok && is_clique_modulator(g, mod);
  }
  if (!ok) throw std::logic_error("generated instance breaks its structural promise");
  return {std::move(g), std::move(mod)};
}

}  // namespace domcol
