#include "domcol/cvd.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "domcol/cluster.hpp"
#include "domcol/covering_ilp.hpp"
#include "domcol/errors.hpp"
#include "domcol/matching.hpp"

namespace domcol {

NeighborhoodClasses neighborhood_classes(const Graph& g, const VertexSet& m) {
  const ClusterStructure cs = cluster_structure(g, m);
  NeighborhoodClasses nc;
  nc.cliques = cs.cliques;
  nc.classes.resize(cs.cliques.size());
  for (int i = 0; i < cs.num_cliques(); ++i) {
    auto& list = nc.classes[i];
    for (Vertex v : cs.cliques[i]) {
      VertexSet seen = g.neighbors(v) & m;
      auto it = std::find_if(list.begin(), list.end(),
                             [&](const NeighborhoodClass& c) { return c.m_neighbors == seen; });
      if (it == list.end()) {
        list.push_back(NeighborhoodClass{i, seen, {v}});
        nc.representatives.push_back(v);
      } else {
        it->members.push_back(v);
      }
    }
  }
  std::sort(nc.representatives.begin(), nc.representatives.end());
  return nc;
}

namespace {

class CvdSearch {
 public:
  CvdSearch(const Graph& g, const VertexSet& m, int ell)
      : g_(g), ell_(ell), n_(g.n()), mod_(m.members()), nc_(neighborhood_classes(g, m)) {
    pool_ = mod_;
    pool_.insert(pool_.end(), nc_.representatives.begin(), nc_.representatives.end());
  }

  std::optional<Coloring> run() {
    std::optional<Coloring> found;
    for_each_modulator_partition(g_, mod_, true, [&](const std::vector<Color>& part, int kappa) {
      cls_.assign(kappa, VertexSet(n_));
      chi_.assign(n_, kUncolored);
      for (std::size_t i = 0; i < mod_.size(); ++i) {
        cls_[part[i]].insert(mod_[i]);
        chi_[mod_[i]] = part[i];
      }
      for (Mask p0 = 0; p0 < bit(kappa); ++p0) {
        p1_.clear();
        for (Color c = 0; c < kappa; ++c)
          if (!(p0 & bit(c))) p1_.push_back(c);
        dominator_.assign(p1_.size(), -1);
        if (pick_dominators(0)) {
          found = result_;
          return true;
        }
      }
      return false;
    });
    return found;
  }

 private:
  bool pick_dominators(std::size_t idx) {
    if (idx == p1_.size()) return place(0, 0);
    for (Vertex d : pool_) {
      if (!cls_[p1_[idx]].is_subset_of(g_.closed_neighborhood(d))) continue;
      dominator_[idx] = d;
      if (pick_dominators(idx + 1)) return true;
    }
    return false;
  }

  // For the (t, i)-th pair of shared color and clique: add nothing, or the lowest
  // uncolored vertex of one neighborhood class that fits.
  bool place(std::size_t t, std::size_t i) {
    if (t == p1_.size()) return finish();
    if (i == nc_.cliques.size()) return place(t + 1, 0);
    if (place(t, i + 1)) return true;
    const Color c = p1_[t];
    const VertexSet nd = g_.closed_neighborhood(dominator_[t]);
    for (const NeighborhoodClass& cl : nc_.classes[i]) {
      if (cl.m_neighbors.intersects(cls_[c])) continue;
      Vertex v = -1;
      for (Vertex w : cl.members)
        if (chi_[w] == kUncolored) {
          v = w;
          break;
        }
      if (v < 0 || !nd.contains(v)) continue;
      chi_[v] = c;
      bool ok = place(t, i + 1);
      chi_[v] = kUncolored;
      if (ok) return true;
    }
    return false;
  }

  // New classes: those dominated by a modulator vertex take one vertex per
  // clique from its neighbors; those dominated from inside a clique are
  // singletons (y_i). Hall's condition per clique gives the rows.
  bool finish() {
    std::set<Color> used(chi_.begin(), chi_.end());
    used.erase(kUncolored);
    const int ell_prime = static_cast<int>(used.size());
    if (ell_prime > ell_) return false;

    const int k = static_cast<int>(mod_.size());
    const int q = static_cast<int>(nc_.cliques.size());
    CoveringILP ilp;
    std::vector<std::vector<std::vector<Vertex>>> open(q);  // per clique, per class
    for (int i = 0; i < q; ++i) {
      std::vector<Mask> sees;
      for (const NeighborhoodClass& cl : nc_.classes[i]) {
        std::vector<Vertex> rest;
        for (Vertex v : cl.members)
          if (chi_[v] == kUncolored) rest.push_back(v);
        if (rest.empty()) continue;
        Mask s = 0;
        for (int j = 0; j < k; ++j)
          if (cl.m_neighbors.contains(mod_[j])) s |= bit(j);
        sees.push_back(s);
        open[i].push_back(std::move(rest));
      }
      const int present = static_cast<int>(open[i].size());
      for (Mask sub = 1; sub < bit(present); ++sub) {
        std::vector<int> row(k + q, 0);
        int demand = 0;
        Mask reach = 0;
        for (int j = 0; j < present; ++j)
          if (sub & bit(j)) {
            reach |= sees[j];
            demand += static_cast<int>(open[i][j].size());
          }
        for (int j = 0; j < k; ++j) row[j] = (reach & bit(j)) ? 1 : 0;
        row[k + i] = 1;
        ilp.a.push_back(std::move(row));
        ilp.b.push_back(demand);
      }
    }
    if (ilp.a.empty()) ilp.a.emplace_back(k + q, 0), ilp.b.push_back(0);
    IlpSolution sol = solve_covering_ilp(ilp);
    if (!sol.feasible || ell_prime + sol.optimum > ell_) return false;

    Coloring out{chi_};
    Color next = kUncolored;
    for (Color c : chi_) next = std::max(next, c);
    ++next;
    std::vector<Color> first_of(k, 0);
    for (int j = 0; j < k; ++j) {
      first_of[j] = next;
      next += sol.x[j];
    }
    for (int i = 0; i < q; ++i) {
      std::vector<Vertex> left;
      for (const auto& rest : open[i]) left.insert(left.end(), rest.begin(), rest.end());
      std::vector<Color> slot_color;
      std::vector<int> slot_owner;  // modulator index, or -1 for a private color
      for (int j = 0; j < k; ++j)
        for (int t = 0; t < sol.x[j]; ++t) {
          slot_color.push_back(first_of[j] + t);
          slot_owner.push_back(j);
        }
      for (int t = 0; t < sol.x[k + i]; ++t) {
        slot_color.push_back(next++);
        slot_owner.push_back(-1);
      }
      std::vector<std::vector<int>> adj(left.size());
      for (std::size_t a = 0; a < left.size(); ++a)
        for (std::size_t s = 0; s < slot_owner.size(); ++s)
          if (slot_owner[s] < 0 || g_.adjacent(left[a], mod_[slot_owner[s]])) adj[a].push_back(static_cast<int>(s));
      Matching mt = max_bipartite_matching(static_cast<int>(left.size()), static_cast<int>(slot_color.size()), adj);
      if (mt.size < static_cast<int>(left.size())) throw std::logic_error("cvd extension matching failed");
      for (std::size_t a = 0; a < left.size(); ++a) out.colors[left[a]] = slot_color[mt.match_left[a]];
    }
    out = out.normalized();
    if (!validate_cdcol(g_, out) || out.num_colors() > ell_) {
      throw std::logic_error("cdcol_cvd produced an invalid coloring");
    }
    result_ = std::move(out);
    return true;
  }

  const Graph& g_;
  int ell_;
  int n_;
  std::vector<Vertex> mod_;
  NeighborhoodClasses nc_;
  std::vector<Vertex> pool_;

  std::vector<VertexSet> cls_;
  std::vector<Color> chi_;
  std::vector<Color> p1_;
  std::vector<Vertex> dominator_;
  std::optional<Coloring> result_;
};

}  // namespace

SolveResult cdcol_cvd(const Graph& g, const VertexSet& m, int ell) {
  if (m.universe() != g.n() || !is_cvd_set(g, m)) throw UsageError("given set is not a CVD set");
  ReducedInstance red = remove_isolated_cliques(g, m, ell);
  if (red.ell < 0) return {};
  if (red.graph.n() == 0) return {true, lift_coloring(red, Coloring{}, g.n())};
  CvdSearch search(red.graph, red.modulator, red.ell);
  auto found = search.run();
  if (!found) return {};
  return {true, lift_coloring(red, *found, g.n())};
}

}  // namespace domcol
