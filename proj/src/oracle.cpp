#include "domcol/oracle.hpp"

#include <algorithm>

#include "domcol/errors.hpp"
#include "domcol/guards.hpp"

namespace domcol {

namespace {

Mask max_clique_rec(const std::vector<Mask>& open, Mask current, Mask cand, Mask best) {
  if (cand == 0) return popcount(current) > popcount(best) ? current : best;
  if (popcount(current) + popcount(cand) <= popcount(best)) return best;
  int v = lowest_bit(cand);
  best = max_clique_rec(open, current | bit(v), cand & open[v], best);
  return max_clique_rec(open, current, cand & ~bit(v), best);
}

Mask max_clique_mask(const Graph& g) {
  std::vector<Mask> open(g.n());
  for (Vertex v = 0; v < g.n(); ++v) open[v] = g.open_mask(v);
  Mask all = g.n() == 64 ? ~Mask{0} : bit(g.n()) - 1;
  return max_clique_rec(open, 0, all, 0);
}

// Clique vertices first so the restricted-growth enumeration fixes their colors,
// then greedily the vertex with most already-placed neighbors.
std::vector<Vertex> search_order(const Graph& g) {
  Mask placed = max_clique_mask(g);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.n(); ++v)
    if (placed & bit(v)) order.push_back(v);
  while (static_cast<int>(order.size()) < g.n()) {
    Vertex best = -1;
    int best_score = -1;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (placed & bit(v)) continue;
      int score = popcount(g.open_mask(v) & placed);
      if (score > best_score) {
        best = v;
        best_score = score;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

enum class Mode { proper, domcol, cdcol };

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, Mode mode, int limit)
      : g_(g), n_(g.n()), mode_(mode), limit_(limit), order_(search_order(g)),
        open_(n_), closed_(n_), cls_(n_ + 1, 0), color_(n_, kUncolored) {
    for (Vertex v = 0; v < n_; ++v) {
      open_[v] = g.open_mask(v);
      closed_[v] = g.closed_mask(v);
    }
  }

  std::optional<Coloring> run() {
    if (n_ == 0) return Coloring{};
    if (limit_ <= 0) return std::nullopt;
    if (!rec(0, 0)) return std::nullopt;
    return Coloring{color_}.normalized();
  }

 private:
  bool class_dominated(Mask cls) const {
    for (Vertex u = 0; u < n_; ++u)
      if ((cls & ~closed_[u]) == 0) return true;
    return false;
  }

  // With the palette exhausted, every vertex needs an existing class inside N[v].
  bool domcol_alive(int used) const {
    for (Vertex v = 0; v < n_; ++v) {
      bool ok = false;
      for (int c = 0; c < used && !ok; ++c) ok = (cls_[c] & ~closed_[v]) == 0;
      if (!ok) return false;
    }
    return true;
  }

  bool leaf(int used) const {
    if (mode_ == Mode::domcol) return domcol_alive(used);
    return true;  // cdcol classes are checked incrementally
  }

  bool place(int i, int used, int c) {
    Vertex v = order_[i];
    if (cls_[c] & open_[v]) return false;
    Mask grown = cls_[c] | bit(v);
    if (mode_ == Mode::cdcol && !class_dominated(grown)) return false;
    Mask saved = cls_[c];
    cls_[c] = grown;
    color_[v] = c;
    int now_used = std::max(used, c + 1);
    bool ok = true;
    if (mode_ == Mode::domcol && now_used == limit_) ok = domcol_alive(now_used);
    if (ok) ok = rec(i + 1, now_used);
    if (!ok) {
      cls_[c] = saved;
      color_[v] = kUncolored;
    }
    return ok;
  }

  bool rec(int i, int used) {
    if (i == n_) return leaf(used);
    for (int c = 0; c < used; ++c)
      if (place(i, used, c)) return true;
    if (used < limit_ && place(i, used, used)) return true;
    return false;
  }

  const Graph& g_;
  int n_;
  Mode mode_;
  int limit_;
  std::vector<Vertex> order_;
  std::vector<Mask> open_, closed_;
  std::vector<Mask> cls_;
  std::vector<Color> color_;
};

void guard_oracle(const Graph& g) {
  check_guard("oracle vertex count", g.n(), Guards::active().oracle_max_n);
  check_guard("oracle vertex count (bitmask limit)", g.n(), 64);
}

std::optional<ColoringWitness> threshold(Problem p, const Graph& g, int ell) {
  guard_oracle(g);
  PartitionSearch search(g, p == Problem::domcol ? Mode::domcol : Mode::cdcol, std::min(ell, g.n()));
  auto col = search.run();
  if (!col) return std::nullopt;
  auto w = validate(p, g, *col);
  if (!w) throw std::logic_error("oracle produced an invalid coloring");
  return ColoringWitness{std::move(*col), std::move(*w)};
}

OracleAnswer optimum_impl(Problem p, const Graph& g) {
  guard_oracle(g);
  // Every vertex in its own class is always valid, so the search stops by n.
  for (int ell = std::max(1, max_clique_size(g)); ell <= std::max(1, g.n()); ++ell) {
    if (auto w = threshold(p, g, ell)) {
      return OracleAnswer{w->coloring.num_colors(), std::move(w->coloring), std::move(w->witness)};
    }
  }
  throw std::logic_error("oracle found no coloring");
}

}  // namespace

int max_clique_size(const Graph& g) {
  check_guard("max clique vertex count (bitmask limit)", g.n(), 64);
  return popcount(max_clique_mask(g));
}

std::optional<ColoringWitness> domcol_at_most(const Graph& g, int ell) {
  return threshold(Problem::domcol, g, ell);
}

std::optional<ColoringWitness> cdcol_at_most(const Graph& g, int ell) {
  return threshold(Problem::cdcol, g, ell);
}

std::optional<ColoringWitness> at_most(Problem p, const Graph& g, int ell) { return threshold(p, g, ell); }

OracleAnswer domcol_optimum(const Graph& g) { return optimum_impl(Problem::domcol, g); }
OracleAnswer cdcol_optimum(const Graph& g) { return optimum_impl(Problem::cdcol, g); }
OracleAnswer optimum(Problem p, const Graph& g) { return optimum_impl(p, g); }

int chromatic_number(const Graph& g) {
  guard_oracle(g);
  if (g.n() == 0) return 0;
  for (int ell = max_clique_size(g);; ++ell) {
    PartitionSearch search(g, Mode::proper, ell);
    if (search.run()) return ell;
  }
}

std::optional<Coloring> list_coloring_oracle(const Graph& g,
                                             const std::vector<std::vector<Color>>& lists) {
  check_guard("list-coloring oracle vertex count", g.n(), Guards::active().list_oracle_max_n);
  if (static_cast<int>(lists.size()) != g.n()) throw UsageError("one list per vertex required");
  Coloring col;
  col.colors.assign(g.n(), kUncolored);
  auto rec = [&](auto&& self, Vertex v) -> bool {
    if (v == g.n()) return true;
    for (Color c : lists[v]) {
      bool clash = false;
      g.neighbors(v).for_each([&](Vertex u) {
        if (u < v && col.colors[u] == c) clash = true;
      });
      if (clash) continue;
      col.colors[v] = c;
      if (self(self, v + 1)) return true;
    }
    col.colors[v] = kUncolored;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return col;
}

bool hitting_set_oracle(int universe, const std::vector<std::vector<int>>& family, int kappa) {
  check_guard("hitting-set universe", universe, Guards::active().hitting_set_max_universe);
  std::vector<Mask> sets;
  for (const auto& f : family) {
    Mask m = 0;
    for (int e : f) {
      if (e < 0 || e >= universe) throw UsageError("hitting-set element out of range");
      m |= bit(e);
    }
    if (m == 0) return false;
    sets.push_back(m);
  }
  for (Mask s = 0; s < bit(universe); ++s) {
    if (popcount(s) > kappa) continue;
    bool hits = std::all_of(sets.begin(), sets.end(), [s](Mask f) { return (f & s) != 0; });
    if (hits) return true;
  }
  return false;
}

}  // namespace domcol
