#include "domcol/reductions.hpp"

#include <algorithm>
#include <set>

#include "domcol/errors.hpp"

namespace domcol {

Graph add_universal_vertex(const Graph& g) {
  Graph h(g.n() + 1);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  for (Vertex v = 0; v < g.n(); ++v) h.add_edge(g.n(), v);
  return h;
}

HittingSetReduction hitting_set_to_domcol(const HittingSetInstance& hs) {
  const int n = hs.universe;
  if (n < 0) throw UsageError("negative universe size");
  if (hs.budget < 0 || hs.budget > n) throw UsageError("hitting-set budget must lie in [0, universe]");

  std::vector<std::vector<int>> family;
  std::set<std::vector<int>> seen;
  for (const auto& f : hs.family) {
    std::vector<int> member(f);
    std::sort(member.begin(), member.end());
    member.erase(std::unique(member.begin(), member.end()), member.end());
    for (int e : member)
      if (e < 0 || e >= n) throw UsageError("family element out of range");
    if (seen.insert(member).second) family.push_back(std::move(member));
  }

  const int q2 = n - hs.budget;
  const Vertex m1 = n + q2;
  const Vertex m2 = m1 + 1;
  const Vertex first_f = m2 + 1;
  Graph g(first_f + static_cast<int>(family.size()));

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  for (Vertex u = n; u < n + q2; ++u)
    for (Vertex v = u + 1; v < n + q2; ++v) g.add_edge(u, v);
  for (Vertex v = 0; v < n + q2; ++v) {
    g.add_edge(m1, v);
    g.add_edge(m2, v);
  }
  g.add_edge(m1, m2);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (int e : family[i]) g.add_edge(first_f + static_cast<Vertex>(i), e);

  VertexSet cvd(g.n());
  cvd.insert(m1);
  cvd.insert(m2);
  for (Vertex v = first_f; v < g.n(); ++v) cvd.insert(v);
  return HittingSetReduction{std::move(g), n + 2, std::move(cvd)};
}

}  // namespace domcol
