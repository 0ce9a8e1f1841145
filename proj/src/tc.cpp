#include "domcol/tc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "domcol/cluster.hpp"
#include "domcol/errors.hpp"
#include "domcol/matching.hpp"

namespace domcol {

namespace {

int count_colors(const std::vector<Color>& chi) {
  std::set<Color> used(chi.begin(), chi.end());
  used.erase(kUncolored);
  return static_cast<int>(used.size());
}

Color max_color(const std::vector<Color>& chi) {
  Color mx = kUncolored;
  for (Color c : chi) mx = std::max(mx, c);
  return mx;
}

std::map<Color, VertexSet> classes_of(int n, const std::vector<Color>& chi) {
  std::map<Color, VertexSet> out;
  for (Vertex v = 0; v < n; ++v)
    if (chi[v] != kUncolored) out.try_emplace(chi[v], n).first->second.insert(v);
  return out;
}

void check_partial_proper(const Graph& g, const VertexSet& m, const VertexSet& colored,
                          const std::vector<Color>& chi) {
  if (static_cast<int>(chi.size()) != g.n() || colored.universe() != g.n()) {
    throw UsageError("partial coloring has wrong size");
  }
  if (!m.is_subset_of(colored)) throw UsageError("partial coloring must color the whole modulator");
  for (Vertex v = 0; v < g.n(); ++v) {
    if (colored.contains(v) != (chi[v] != kUncolored) || (chi[v] < 0 && chi[v] != kUncolored)) {
      throw UsageError("partial coloring disagrees with its colored set");
    }
  }
  for (auto [u, v] : g.edges())
    if (chi[u] != kUncolored && chi[u] == chi[v]) throw UsageError("partial coloring is not proper");
}

Vertex lowest_uncolored(const std::vector<Vertex>& clique, const std::vector<Color>& chi) {
  for (Vertex v : clique)
    if (chi[v] == kUncolored) return v;
  return -1;
}

}  // namespace

int PartialDominatorColoring::num_colors() const { return count_colors(chi); }
int PartialCDColoring::num_colors() const { return count_colors(chi); }

std::optional<Coloring> list_coloring_cluster(const Graph& h,
                                              const std::vector<std::vector<Color>>& lists) {
  if (static_cast<int>(lists.size()) != h.n()) throw UsageError("one list per vertex required");
  if (!is_cluster_graph(h)) throw UsageError("list_coloring_cluster needs a cluster graph");
  Coloring out;
  out.colors.assign(h.n(), kUncolored);
  for (const VertexSet& comp : connected_components(h)) {
    std::vector<Vertex> vs = comp.members();
    std::map<Color, int> col_index;
    std::vector<Color> index_col;
    std::vector<std::vector<int>> adj(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (Color c : lists[vs[i]]) {
        auto [it, fresh] = col_index.emplace(c, static_cast<int>(index_col.size()));
        if (fresh) index_col.push_back(c);
        adj[i].push_back(it->second);
      }
    }
    Matching mt = max_bipartite_matching(static_cast<int>(vs.size()), static_cast<int>(index_col.size()), adj);
    if (mt.size < static_cast<int>(vs.size())) return std::nullopt;
    for (std::size_t i = 0; i < vs.size(); ++i) out.colors[vs[i]] = index_col[mt.match_left[i]];
  }
  return out;
}

void check_partial_dominator_coloring(const Graph& g, const VertexSet& m,
                                      const PartialDominatorColoring& pdc) {
  check_partial_proper(g, m, pdc.colored, pdc.chi);
  if (static_cast<int>(pdc.delta.size()) != g.n()) throw UsageError("delta must be total");
  auto classes = classes_of(g.n(), pdc.chi);
  for (Vertex v = 0; v < g.n(); ++v) {
    auto it = classes.find(pdc.delta[v]);
    if (it == classes.end()) throw UsageError("vertex " + std::to_string(v) + " dominates an empty class");
    if (!it->second.is_subset_of(g.closed_neighborhood(v))) {
      throw UsageError("vertex " + std::to_string(v) + " does not dominate its class");
    }
  }
}

std::optional<Coloring> extend_domcol(const Graph& g, const VertexSet& m,
                                      const PartialDominatorColoring& pdc, int ell) {
  check_partial_dominator_coloring(g, m, pdc);
  const int used = pdc.num_colors();
  if (used > ell) return std::nullopt;

  // Vertices allowed to join class c without breaking a commitment to c.
  std::map<Color, std::vector<Vertex>> committed;
  for (Vertex v = 0; v < g.n(); ++v) committed[pdc.delta[v]].push_back(v);
  std::map<Color, VertexSet> allowed;
  for (const auto& [c, who] : committed) allowed.emplace(c, common_closed_neighborhood(g, who));

  std::set<Color> image(pdc.chi.begin(), pdc.chi.end());
  image.erase(kUncolored);
  const Color fresh_base = max_color(pdc.chi) + 1;
  const int fresh = ell - used;

  std::vector<Vertex> ids;
  Graph h = g.induced(m.complement(), &ids);
  std::vector<std::vector<Color>> lists(h.n());
  for (Vertex i = 0; i < h.n(); ++i) {
    const Vertex v = ids[i];
    if (pdc.chi[v] != kUncolored) {
      lists[i] = {pdc.chi[v]};
      continue;
    }
    for (Color c : image) {
      auto it = allowed.find(c);
      if (it != allowed.end() && !it->second.contains(v)) continue;
      bool clash = false;
      g.neighbors(v).for_each([&](Vertex u) { clash = clash || pdc.chi[u] == c; });
      if (!clash) lists[i].push_back(c);
    }
    for (int j = 0; j < fresh; ++j) lists[i].push_back(fresh_base + j);
  }

  auto hc = list_coloring_cluster(h, lists);
  if (!hc) return std::nullopt;
  Coloring out{pdc.chi};
  for (Vertex i = 0; i < h.n(); ++i) out.colors[ids[i]] = hc->colors[i];
  out = out.normalized();
  if (!validate_domcol(g, out) || out.num_colors() > ell) {
    throw std::logic_error("extend_domcol produced an invalid coloring");
  }
  return out;
}

bool for_each_gamma_domcol(const Graph& g, const VertexSet& m,
                           const std::function<bool(const PartialDominatorColoring&)>& f) {
  if (!is_twin_cover(g, m)) throw UsageError("given set is not a twin cover");
  const ClusterStructure cs = cluster_structure(g, m);
  const std::vector<Vertex> mod = m.members();
  const int k = static_cast<int>(mod.size());
  const int n = g.n();

  auto visit_split = [&](const std::vector<Color>& part, int kappa, Mask p0) -> bool {
    std::vector<VertexSet> cls(kappa, VertexSet(n));
    PartialDominatorColoring base{m, std::vector<Color>(n, kUncolored), std::vector<Color>(n, kUncolored)};
    for (int i = 0; i < k; ++i) {
      cls[part[i]].insert(mod[i]);
      base.chi[mod[i]] = part[i];
    }
    auto in_p0 = [&](Color c) { return c < kappa && (p0 & bit(c)); };

    // Cliques dominating no color that lives only in M get a private color on
    // their lowest vertex.
    Color next_unique = kappa + k;
    std::vector<std::pair<Color, Vertex>> unique;
    for (const auto& q : cs.cliques) {
      const VertexSet nq = g.closed_neighborhood(q[0]);
      Color d = kUncolored;
      for (Color c = 0; c < kappa && d == kUncolored; ++c)
        if (in_p0(c) && cls[c].is_subset_of(nq)) d = c;
      if (d == kUncolored) {
        d = next_unique++;
        base.chi[q[0]] = d;
        base.colored.insert(q[0]);
        unique.emplace_back(d, q[0]);
      }
      for (Vertex v : q) base.delta[v] = d;
    }

    // Modulator vertices that already see a finished class commit to it.
    std::vector<Vertex> rest;
    for (Vertex u : mod) {
      const VertexSet nu = g.closed_neighborhood(u);
      Color d = kUncolored;
      for (Color c = 0; c < kappa && d == kUncolored; ++c)
        if (in_p0(c) && cls[c].is_subset_of(nu)) d = c;
      for (std::size_t t = 0; t < unique.size() && d == kUncolored; ++t)
        if (nu.contains(unique[t].second)) d = unique[t].first;
      if (d == kUncolored) {
        rest.push_back(u);
      } else {
        base.delta[u] = d;
      }
    }

    PartialDominatorColoring cur = base;
    // The others pick a shared class or one of up to k new classes, named in
    // order of first use.
    auto rec = [&](auto&& self, std::size_t idx, int new_used) -> bool {
      if (idx == rest.size()) {
        std::vector<std::vector<int>> adj(new_used);
        std::vector<Vertex> right;
        std::vector<int> right_index(n, -1);
        for (int j = 0; j < new_used; ++j) {
          std::vector<Vertex> who;
          for (Vertex u : rest)
            if (cur.delta[u] == kappa + j) who.push_back(u);
          const VertexSet ok = common_closed_neighborhood(g, who);
          for (const auto& q : cs.cliques)
            for (Vertex v : q) {
              if (cur.chi[v] != kUncolored || !ok.contains(v)) continue;
              if (right_index[v] < 0) {
                right_index[v] = static_cast<int>(right.size());
                right.push_back(v);
              }
              adj[j].push_back(right_index[v]);
            }
        }
        Matching mt = max_bipartite_matching(new_used, static_cast<int>(right.size()), adj);
        if (mt.size < new_used) return false;
        PartialDominatorColoring member = cur;
        for (int j = 0; j < new_used; ++j) {
          const Vertex v = right[mt.match_left[j]];
          member.chi[v] = kappa + j;
          member.colored.insert(v);
        }
        return f(member);
      }
      const Vertex u = rest[idx];
      const VertexSet nu = g.closed_neighborhood(u);
      for (Color c = 0; c < kappa; ++c) {
        if (in_p0(c) || !cls[c].is_subset_of(nu)) continue;
        cur.delta[u] = c;
        if (self(self, idx + 1, new_used)) return true;
      }
      for (int j = 0; j <= new_used && j < k; ++j) {
        cur.delta[u] = kappa + j;
        if (self(self, idx + 1, std::max(new_used, j + 1))) return true;
      }
      cur.delta[u] = kUncolored;
      return false;
    };
    return rec(rec, 0, 0);
  };

  return for_each_modulator_partition(g, mod, false, [&](const std::vector<Color>& part, int kappa) {
    for (Mask p0 = 0; p0 < bit(kappa); ++p0)
      if (visit_split(part, kappa, p0)) return true;
    return false;
  });
}

std::vector<PartialDominatorColoring> gamma_domcol(const Graph& g, const VertexSet& m) {
  std::vector<PartialDominatorColoring> out;
  for_each_gamma_domcol(g, m, [&](const PartialDominatorColoring& p) {
    out.push_back(p);
    return false;
  });
  return out;
}

Coloring lift_coloring(const ReducedInstance& red, const Coloring& c, int original_n) {
  Coloring out;
  out.colors.assign(original_n, kUncolored);
  Color next = 0;
  for (std::size_t i = 0; i < red.kept.size(); ++i) {
    out.colors[red.kept[i]] = c.colors[i];
    next = std::max(next, c.colors[i] + 1);
  }
  for (Vertex v : red.removed) out.colors[v] = next++;
  return out.normalized();
}

SolveResult domcol_tc(const Graph& g, const VertexSet& m, int ell) {
  if (!is_twin_cover(g, m)) throw UsageError("given set is not a twin cover");
  // Isolated vertices each need a class of their own.
  ReducedInstance red;
  VertexSet keep(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) {
      red.removed.push_back(v);
    } else {
      keep.insert(v);
    }
  }
  red.graph = g.induced(keep, &red.kept);
  red.modulator = VertexSet(red.graph.n());
  for (std::size_t i = 0; i < red.kept.size(); ++i)
    if (m.contains(red.kept[i])) red.modulator.insert(static_cast<Vertex>(i));
  red.ell = ell - static_cast<int>(red.removed.size());

  if (red.ell < 0) return {};
  if (red.graph.n() == 0) return {true, lift_coloring(red, Coloring{}, g.n())};

  std::optional<Coloring> found;
  for_each_gamma_domcol(red.graph, red.modulator, [&](const PartialDominatorColoring& pdc) {
    if (pdc.num_colors() > red.ell) return false;
    found = extend_domcol(red.graph, red.modulator, pdc, red.ell);
    return found.has_value();
  });
  if (!found) return {};
  return {true, lift_coloring(red, *found, g.n())};
}

ReducedInstance remove_isolated_cliques(const Graph& g, const VertexSet& m, int ell) {
  const ClusterStructure cs = cluster_structure(g, m);
  VertexSet keep = VertexSet::full(g.n());
  ReducedInstance red;
  for (const auto& q : cs.cliques) {
    bool touches_m = false;
    for (Vertex v : q) touches_m = touches_m || g.neighbors(v).intersects(m);
    if (touches_m) continue;
    for (Vertex v : q) {
      keep.erase(v);
      red.removed.push_back(v);
    }
  }
  std::sort(red.removed.begin(), red.removed.end());
  red.graph = g.induced(keep, &red.kept);
  red.modulator = VertexSet(red.graph.n());
  for (std::size_t i = 0; i < red.kept.size(); ++i)
    if (m.contains(red.kept[i])) red.modulator.insert(static_cast<Vertex>(i));
  red.ell = ell - static_cast<int>(red.removed.size());
  return red;
}

namespace {

void check_partial_cd(const Graph& g, const VertexSet& m, const PartialCDColoring& pcd) {
  check_partial_proper(g, m, pcd.colored, pcd.chi);
  for (const auto& [c, cls] : classes_of(g.n(), pcd.chi))
    if (!is_dominated(g, cls)) throw UsageError("partial CD coloring has an undominated class");
}

}  // namespace

CoveringILP cdcol_extension_ilp(const Graph& g, const VertexSet& m, const PartialCDColoring& pcd) {
  const ClusterStructure cs = cluster_structure(g, m);
  const std::vector<Vertex> mod = m.members();
  CoveringILP ilp;
  for (const auto& q : cs.cliques) {
    std::vector<Vertex> open;
    for (Vertex v : q)
      if (pcd.chi[v] == kUncolored) open.push_back(v);
    std::vector<int> row(mod.size(), 0);
    for (std::size_t j = 0; j < mod.size(); ++j) {
      bool all = true;
      for (Vertex v : open.empty() ? std::vector<Vertex>{q[0]} : open)
        all = all && g.adjacent(v, mod[j]);
      row[j] = all ? 1 : 0;
    }
    ilp.a.push_back(std::move(row));
    ilp.b.push_back(static_cast<int>(open.size()));
  }
  return ilp;
}

CdExtension extend_cdcol_disjoint(const Graph& g, const VertexSet& m, const PartialCDColoring& pcd,
                                  int ell) {
  if (!is_twin_cover(g, m)) throw UsageError("given set is not a twin cover");
  check_partial_cd(g, m, pcd);
  CdExtension ext;
  ext.ell_prime = pcd.num_colors();
  const CoveringILP ilp = cdcol_extension_ilp(g, m, pcd);
  ext.ilp = solve_covering_ilp(ilp);
  if (!ext.ilp.feasible) return ext;
  ext.answer = ext.ell_prime + ext.ilp.optimum <= ell;

  // Materialise: every copy of column j is a new color holding one uncolored
  // vertex from each clique next to m_j.
  const ClusterStructure cs = cluster_structure(g, m);
  Coloring out{pcd.chi};
  Color next = max_color(pcd.chi) + 1;
  for (int j = 0; j < ilp.cols(); ++j) {
    for (int t = 0; t < ext.ilp.x[j]; ++t, ++next) {
      for (int i = 0; i < ilp.rows(); ++i) {
        if (!ilp.a[i][j]) continue;
        Vertex v = lowest_uncolored(cs.cliques[i], out.colors);
        if (v >= 0) out.colors[v] = next;
      }
    }
  }
  out = out.normalized();
  if (!validate_cdcol(g, out) || out.num_colors() != ext.ell_prime + ext.ilp.optimum) {
    throw std::logic_error("extend_cdcol_disjoint produced an invalid coloring");
  }
  ext.coloring = std::move(out);
  return ext;
}

bool for_each_gamma_cdcol(const Graph& g, const VertexSet& m,
                          const std::function<bool(const PartialCDColoring&)>& f) {
  if (!is_twin_cover(g, m)) throw UsageError("given set is not a twin cover");
  const ClusterStructure cs = cluster_structure(g, m);
  const std::vector<Vertex> mod = m.members();
  const int k = static_cast<int>(mod.size());
  const int n = g.n();

  return for_each_modulator_partition(g, mod, true, [&](const std::vector<Color>& part, int kappa) {
    std::vector<VertexSet> cls(kappa, VertexSet(n));
    PartialCDColoring base{m, std::vector<Color>(n, kUncolored)};
    for (int i = 0; i < k; ++i) {
      cls[part[i]].insert(mod[i]);
      base.chi[mod[i]] = part[i];
    }
    for (Mask p0 = 0; p0 < bit(kappa); ++p0) {
      std::vector<Color> p1;
      for (Color c = 0; c < kappa; ++c)
        if (!(p0 & bit(c))) p1.push_back(c);
      std::vector<Vertex> delta(p1.size(), -1);

      auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == p1.size()) {
          PartialCDColoring member = base;
          for (std::size_t t = 0; t < p1.size(); ++t) {
            const Color c = p1[t];
            for (const auto& q : cs.cliques) {
              if (!g.adjacent(q[0], delta[t]) || g.neighbors(q[0]).intersects(cls[c])) continue;
              Vertex v = lowest_uncolored(q, member.chi);
              if (v < 0) continue;
              member.chi[v] = c;
              member.colored.insert(v);
            }
          }
          return f(member);
        }
        for (Vertex d : mod) {
          if (!cls[p1[idx]].is_subset_of(g.closed_neighborhood(d))) continue;
          delta[idx] = d;
          if (self(self, idx + 1)) return true;
        }
        return false;
      };
      if (rec(rec, 0)) return true;
    }
    return false;
  });
}

std::vector<PartialCDColoring> gamma_cdcol(const Graph& g, const VertexSet& m) {
  std::vector<PartialCDColoring> out;
  for_each_gamma_cdcol(g, m, [&](const PartialCDColoring& p) {
    out.push_back(p);
    return false;
  });
  return out;
}

SolveResult cdcol_tc(const Graph& g, const VertexSet& m, int ell) {
  if (!is_twin_cover(g, m)) throw UsageError("given set is not a twin cover");
  ReducedInstance red = remove_isolated_cliques(g, m, ell);
  if (red.ell < 0) return {};
  if (red.graph.n() == 0) return {true, lift_coloring(red, Coloring{}, g.n())};

  std::optional<Coloring> found;
  for_each_gamma_cdcol(red.graph, red.modulator, [&](const PartialCDColoring& pcd) {
    if (pcd.num_colors() > red.ell) return false;
    CdExtension ext = extend_cdcol_disjoint(red.graph, red.modulator, pcd, red.ell);
    if (ext.answer) found = ext.coloring;
    return ext.answer;
  });
  if (!found) return {};
  return {true, lift_coloring(red, *found, g.n())};
}

}  // namespace domcol
