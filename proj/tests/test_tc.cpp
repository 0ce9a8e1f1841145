#include "doctest.h"
#include "domcol/covering_ilp.hpp"
#include "domcol/errors.hpp"
#include "domcol/generate.hpp"
#include "domcol/oracle.hpp"
#include "domcol/tc.hpp"
#include "test_support.hpp"

using namespace domcol;
using namespace testing;

namespace {

GeneratedInstance twin_cover_instance(int cliques, int max_clique, int k, std::mt19937_64& rng) {
  InstanceGenSpec spec;
  spec.kind = InstanceKind::twin_cover;
  spec.cliques = cliques;
  spec.min_clique = 1;
  spec.max_clique = max_clique;
  spec.k = k;
  return generate(spec, rng);
}

Graph cluster(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  Graph g(n);
  int base = 0;
  for (int s : sizes) {
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b) g.add_edge(base + a, base + b);
    base += s;
  }
  return g;
}

int brute_ilp(const CoveringILP& ilp) {
  int cap = 0;
  for (int b : ilp.b) cap = std::max(cap, b);
  int best = -1;
  std::vector<int> x(ilp.cols(), 0);
  std::function<void(int, int)> go = [&](int j, int sum) {
    if (j == ilp.cols()) {
      for (int i = 0; i < ilp.rows(); ++i) {
        int lhs = 0;
        for (int c = 0; c < ilp.cols(); ++c) lhs += ilp.a[i][c] * x[c];
        if (lhs < ilp.b[i]) return;
      }
      if (best < 0 || sum < best) best = sum;
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      x[j] = v;
      go(j + 1, sum + v);
    }
    x[j] = 0;
  };
  go(0, 0);
  return best;
}

void check_twin_swaps(Problem p, const Graph& g, const Coloring& c) {
  for (auto [u, v] : true_twin_pairs(g)) {
    Coloring s = c;
    std::swap(s.colors[u], s.colors[v]);
    CHECK(naive_valid(p, g, s));
    CHECK(s.num_colors() == c.num_colors());
  }
}

// Every class with a member outside m is dominated by some vertex of m.
bool classes_dominated_by_m(const Graph& g, const VertexSet& m, const Coloring& c) {
  for (Vertex u = 0; u < g.n(); ++u) {
    if (m.contains(u)) continue;
    bool ok = false;
    for (Vertex d : m.members()) ok = ok || naive_dominates(g, c, d, c.colors[u]);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("list coloring on cluster graphs") {
  CHECK_FALSE(list_coloring_cluster(complete(2), {{1}, {1}}));
  auto c = list_coloring_cluster(complete(3), {{1, 2}, {2, 3}, {1, 3}});
  REQUIRE(c);
  CHECK(naive_proper(complete(3), *c));
  CHECK_THROWS_AS(list_coloring_cluster(path(3), {{1}, {2}, {1}}), UsageError);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Graph g = cluster({1 + t % 3, 1 + t % 4, 2});
    std::vector<std::vector<Color>> lists(g.n());
    for (auto& l : lists)
      for (Color col = 0; col < 4; ++col)
        if (rng() % 2) l.push_back(col);
    auto fast = list_coloring_cluster(g, lists);
    auto slow = list_coloring_oracle(g, lists);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(naive_proper(g, *fast));
      for (Vertex v = 0; v < g.n(); ++v)
        CHECK(std::find(lists[v].begin(), lists[v].end(), fast->colors[v]) != lists[v].end());
    }
  }
}

TEST_CASE("gamma_domcol small cases") {
  auto gamma = gamma_domcol(cluster({2, 3}), VertexSet(5));
  REQUIRE(gamma.size() == 1);
  CHECK(gamma[0].num_colors() == 2);
  for (Vertex v = 0; v < 5; ++v) CHECK(gamma[0].delta[v] >= 0);

  Graph k12 = star(2);
  bool extends = false;
  for (const auto& pdc : gamma_domcol(k12, VertexSet::of(3, {0}))) {
    check_partial_dominator_coloring(k12, VertexSet::of(3, {0}), pdc);
    extends = extends || extend_domcol(k12, VertexSet::of(3, {0}), pdc, 2).has_value();
  }
  CHECK(extends);
}

TEST_CASE("extend_domcol basics") {
  Graph g = path(3);
  VertexSet m = VertexSet::full(3);
  PartialDominatorColoring total{m, {0, 1, 0}, {1, 1, 1}};
  auto c = extend_domcol(g, m, total, 2);
  REQUIRE(c);
  CHECK(c->colors == std::vector<Color>{0, 1, 0});
  CHECK_FALSE(extend_domcol(g, m, total, 1));

  PartialDominatorColoring bad{m, {0, 0, 1}, {0, 0, 1}};
  CHECK_THROWS_AS(check_partial_dominator_coloring(g, m, bad), UsageError);
}

TEST_CASE("extend_domcol is monotone in ell") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto inst = twin_cover_instance(2, 3, 1 + t % 2, rng);
    for (const auto& pdc : gamma_domcol(inst.graph, inst.modulator)) {
      bool before = false;
      for (int ell = 0; ell <= inst.graph.n(); ++ell) {
        bool now = extend_domcol(inst.graph, inst.modulator, pdc, ell).has_value();
        CHECK((!before || now));
        before = now;
      }
    }
  }
}

TEST_CASE("twin-cover DomCol examples") {
  for (auto sizes : std::vector<std::vector<int>>{{1}, {3}, {2, 3}, {1, 1, 2}, {3, 3}}) {
    Graph g = cluster(sizes);
    int q = static_cast<int>(sizes.size());
    int big = *std::max_element(sizes.begin(), sizes.end());
    int ell = q + big - 1;
    CHECK(domcol_optimum(g).optimum == ell);
    CHECK(domcol_tc(g, VertexSet(g.n()), ell).answer);
    CHECK_FALSE(domcol_tc(g, VertexSet(g.n()), ell - 1).answer);
  }
  CHECK(domcol_tc(star(3), VertexSet::of(4, {0}), 2).answer);
  CHECK_THROWS_AS(domcol_tc(path(4), VertexSet(4), 3), UsageError);
}

TEST_CASE("isolated clique removal") {
  Graph g = complete(3);
  auto red = remove_isolated_cliques(g, VertexSet(3), 5);
  CHECK(red.graph.n() == 0);
  CHECK(red.ell == 2);
  CHECK(red.removed.size() == 3);

  Graph s = star(2);
  auto same = remove_isolated_cliques(s, VertexSet::of(3, {0}), 4);
  CHECK(same.graph.n() == 3);
  CHECK(same.ell == 4);
  CHECK(same.removed.empty());
}

TEST_CASE("covering ILP") {
  CHECK(solve_covering_ilp({{{1, 1}}, {3}}).optimum == 3);
  CHECK(solve_covering_ilp({{{1, 0}, {1, 1}}, {2, 3}}).optimum == 3);
  CHECK_FALSE(solve_covering_ilp({{{0}}, {1}}).feasible);
  CHECK(solve_covering_ilp({{}, {}}).optimum == 0);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    int rows = 1 + t % 4, cols = 1 + (t / 4) % 4;
    CoveringILP ilp;
    ilp.a.assign(rows, std::vector<int>(cols, 0));
    for (auto& r : ilp.a)
      for (auto& x : r) x = rng() % 2;
    for (int i = 0; i < rows; ++i) ilp.b.push_back(static_cast<int>(rng() % 4));
    IlpSolution sol = solve_covering_ilp(ilp);
    int brute = brute_ilp(ilp);
    REQUIRE(sol.feasible == (brute >= 0));
    if (!sol.feasible) continue;
    CHECK(sol.optimum == brute);
    int sum = 0;
    for (int i = 0; i < rows; ++i) {
      int lhs = 0;
      for (int j = 0; j < cols; ++j) lhs += ilp.a[i][j] * sol.x[j];
      CHECK(lhs >= ilp.b[i]);
    }
    for (int x : sol.x) sum += x;
    CHECK(sum == sol.optimum);
  }
}

TEST_CASE("disjoint CD extension") {
  // K2 on {1,2}, u = 0 adjacent to both; only u colored.
  Graph g = from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  VertexSet m = VertexSet::of(3, {0});
  PartialCDColoring pcd{m, {0, kUncolored, kUncolored}};
  CoveringILP ilp = cdcol_extension_ilp(g, m, pcd);
  CHECK(ilp.a == std::vector<std::vector<int>>{{1}});
  CHECK(ilp.b == std::vector<int>{2});
  CdExtension ext = extend_cdcol_disjoint(g, m, pcd, 3);
  CHECK(ext.ilp.optimum == 2);
  CHECK(ext.ell_prime == 1);
  CHECK(ext.answer);
  CHECK_FALSE(extend_cdcol_disjoint(g, m, pcd, 2).answer);

  PartialCDColoring total{VertexSet::full(3), {0, 1, 2}};
  CHECK(extend_cdcol_disjoint(g, m, total, 3).answer);
  CHECK_FALSE(extend_cdcol_disjoint(g, m, total, 2).answer);
}

TEST_CASE("disjoint extension size equals brute force minimum") {
  std::mt19937_64 rng(13);
  int sampled = 0;
  while (sampled < 60) {
    auto inst = twin_cover_instance(2 + sampled % 2, 3, 1 + sampled % 3, rng);
    auto red = remove_isolated_cliques(inst.graph, inst.modulator, inst.graph.n());
    if (red.graph.n() == 0 || red.graph.n() > 7) continue;
    std::vector<Color> chi = random_partial_cd(red.graph, red.modulator, rng);
    VertexSet colored(red.graph.n());
    for (Vertex v = 0; v < red.graph.n(); ++v)
      if (chi[v] >= 0) colored.insert(v);
    PartialCDColoring pcd{colored, chi};
    CdExtension ext = extend_cdcol_disjoint(red.graph, red.modulator, pcd, red.graph.n());
    REQUIRE(ext.ilp.feasible);
    CHECK(ext.ell_prime + ext.ilp.optimum == brute_min_disjoint_extension(red.graph, chi));
    ++sampled;
  }
}

TEST_CASE("gamma_cdcol small cases") {
  auto gamma = gamma_cdcol(cluster({2, 3}), VertexSet(5));
  REQUIRE(gamma.size() == 1);
  CHECK(gamma[0].num_colors() == 0);

  Graph k12 = star(2);
  VertexSet m = VertexSet::of(3, {0});
  bool found = false;
  for (const auto& pcd : gamma_cdcol(k12, m)) {
    CdExtension ext = extend_cdcol_disjoint(k12, m, pcd, 2);
    found = found || ext.answer;
  }
  CHECK(found);
  CHECK(cdcol_optimum(k12).optimum == 2);
}

TEST_CASE("twin-cover CD examples") {
  // Two opposite vertices of C4 form a twin cover; two adjacent ones do not.
  Graph c4 = cycle(4);
  CHECK_THROWS_AS(cdcol_tc(c4, VertexSet::of(4, {0, 1}), 2), UsageError);
  CHECK(cdcol_tc(c4, VertexSet::of(4, {0, 2}), 2).answer);
  CHECK_FALSE(cdcol_tc(c4, VertexSet::of(4, {0, 2}), 1).answer);
  CHECK(cdcol_tc(cluster({2, 3}), VertexSet(5), 5).answer);
  CHECK_FALSE(cdcol_tc(cluster({2, 3}), VertexSet(5), 4).answer);
}

TEST_CASE("twin-cover solvers match the oracle, witnesses validate") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    auto inst = twin_cover_instance(1 + t % 3, 3, t % 4, rng);
    const Graph& g = inst.graph;
    if (g.n() > 8) continue;
    ++checked;
    const VertexSet& m = inst.modulator;
    int d = domcol_optimum(g).optimum;
    int c = cdcol_optimum(g).optimum;
    for (int ell = std::max(0, d - 2); ell <= d + 1; ++ell) {
      SolveResult r = domcol_tc(g, m, ell);
      REQUIRE(r.answer == (ell >= d));
      if (r.answer) {
        REQUIRE(r.witness);
        CHECK(naive_domcol(g, *r.witness));
        CHECK(r.witness->num_colors() <= ell);
        check_twin_swaps(Problem::domcol, g, *r.witness);
      }
    }
    auto red = remove_isolated_cliques(g, m, c);
    for (int ell = std::max(0, c - 2); ell <= c + 1; ++ell) {
      SolveResult r = cdcol_tc(g, m, ell);
      REQUIRE(r.answer == (ell >= c));
      if (r.answer) {
        REQUIRE(r.witness);
        CHECK(naive_cdcol(g, *r.witness));
        CHECK(r.witness->num_colors() <= ell);
        check_twin_swaps(Problem::cdcol, g, *r.witness);
        if (red.removed.empty() && !m.empty()) CHECK(classes_dominated_by_m(g, m, *r.witness));
      }
    }
  }
  CHECK(checked >= 100);
}
