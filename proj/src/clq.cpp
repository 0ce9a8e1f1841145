#include "domcol/clq.hpp"

#include <algorithm>

#include "domcol/errors.hpp"
#include "domcol/exact.hpp"
#include "domcol/guards.hpp"

namespace domcol {

int PolyMatrix::add_poly(EntryPoly p) {
  polys.push_back(std::move(p));
  return static_cast<int>(polys.size()) - 1;
}

Mask SupportGraph::sieve_vars() const {
  int vars = problem == Problem::domcol ? 2 * k : k;
  return vars == 0 ? 0 : (vars == 64 ? ~Mask{0} : bit(vars) - 1);
}

namespace {

struct ModulatorView {
  std::vector<Vertex> mod;
  std::vector<Vertex> clique;
  std::vector<Mask> conflict;  // modulator-index adjacency
  std::vector<VertexSet> members;

  ModulatorView(const Graph& g, const VertexSet& m) {
    if (m.universe() != g.n()) throw UsageError("modulator over wrong vertex range");
    if (!is_clique_modulator(g, m)) throw UsageError("given set is not a clique modulator");
    mod = m.members();
    clique = m.complement().members();
    check_guard("clique modulator size (bitmask limit)", static_cast<long>(mod.size()), 30);
    conflict.assign(mod.size(), 0);
    for (std::size_t i = 0; i < mod.size(); ++i)
      for (std::size_t j = 0; j < mod.size(); ++j)
        if (g.adjacent(mod[i], mod[j])) conflict[i] |= bit(static_cast<int>(j));
  }

  int k() const { return static_cast<int>(mod.size()); }

  bool independent(Mask s) const {
    for (Mask r = s; r; r &= r - 1)
      if (conflict[lowest_bit(r)] & s) return false;
    return true;
  }

  VertexSet to_set(int n, Mask s, Vertex extra = -1) const {
    VertexSet out(n);
    for (Mask r = s; r; r &= r - 1) out.insert(mod[lowest_bit(r)]);
    if (extra >= 0) out.insert(extra);
    return out;
  }

  // Modulator vertices u (as index mask) with N[u] ⊇ cls.
  Mask dominators_in_m(const Graph& g, const VertexSet& cls) const {
    Mask out = 0;
    for (int i = 0; i < k(); ++i)
      if (cls.is_subset_of(g.closed_neighborhood(mod[i]))) out |= bit(i);
    return out;
  }

  bool dominated_somewhere(const Graph& g, const VertexSet& cls) const {
    for (Vertex u = 0; u < g.n(); ++u)
      if (cls.is_subset_of(g.closed_neighborhood(u))) return true;
    return false;
  }

  // Modulator-index mask of neighbors of v.
  Mask adjacent_mask(const Graph& g, Vertex v) const {
    Mask out = 0;
    for (int i = 0; i < k(); ++i)
      if (g.adjacent(v, mod[i])) out |= bit(i);
    return out;
  }
};

// Real-color entry polynomial for row vertex v; it does not depend on the color.
EntryPoly row_polynomial(Problem p, const Graph& g, const ModulatorView& mv, Vertex v) {
  const int k = mv.k();
  int self = -1;
  for (int i = 0; i < k; ++i)
    if (mv.mod[i] == v) self = i;
  const Mask blocked = self < 0 ? mv.adjacent_mask(g, v) : 0;

  EntryPoly poly;
  for (Mask s1 = 0; s1 < bit(k); ++s1) {
    if (self >= 0 && !(s1 & bit(self))) continue;
    if (s1 & blocked) continue;
    if (!mv.independent(s1)) continue;
    VertexSet cls = mv.to_set(g.n(), s1, self < 0 ? v : -1);
    if (p == Problem::domcol) {
      Mask s2 = mv.dominators_in_m(g, cls);
      poly.monomials.push_back(s1 | (s2 << k));
    } else if (mv.dominated_somewhere(g, cls)) {
      poly.monomials.push_back(s1);
    }
  }
  return poly;
}

SupportGraph build_support(Problem p, const Graph& g, const VertexSet& m, int ell) {
  if (ell < 0) throw UsageError("ell must be non-negative");
  ModulatorView mv(g, m);
  SupportGraph sg;
  sg.problem = p;
  sg.ell = ell;
  sg.k = mv.k();
  sg.modulator = mv.mod;
  sg.clique = mv.clique;
  if (static_cast<int>(mv.clique.size()) > ell) {
    sg.trivially_no = true;
    return sg;
  }

  const int k = sg.k;
  const int dim = ell + k;
  sg.matrix = PolyMatrix(dim, p == Problem::domcol ? 2 * k : k);
  sg.row_vertex.assign(dim, -1);
  for (Vertex v = 0; v < g.n(); ++v) sg.row_vertex[v] = v;

  // Artificial edges carry the constant polynomial 1.
  const int one = sg.matrix.add_poly(EntryPoly{{0}});
  std::vector<int> mod_index(g.n(), -1);
  for (int i = 0; i < k; ++i) mod_index[mv.mod[i]] = i;

  for (int r = 0; r < dim; ++r) {
    Vertex v = sg.row_vertex[r];
    if (v < 0) {
      for (int c = 0; c < dim; ++c) sg.matrix.set(r, c, one);
      continue;
    }
    int poly = sg.matrix.add_poly(row_polynomial(p, g, mv, v));
    if (sg.matrix.polys[poly].monomials.empty()) poly = -1;
    for (int c = 0; c < ell; ++c) sg.matrix.set(r, c, poly);
    if (mod_index[v] >= 0) sg.matrix.set(r, ell + mod_index[v], one);
  }
  return sg;
}

}  // namespace

SupportGraph build_support_domcol(const Graph& g, const VertexSet& m, int ell) {
  return build_support(Problem::domcol, g, m, ell);
}

SupportGraph build_support_cdcol(const Graph& g, const VertexSet& m, int ell) {
  return build_support(Problem::cdcol, g, m, ell);
}

FieldContext::FieldContext(std::uint64_t seed) : rng_(seed) {}

void FieldContext::resample(int dim, int num_vars) {
  std::uniform_int_distribution<u64> dist(0, kMersenne61 - 1);
  dim_ = dim;
  vars_.resize(num_vars);
  for (auto& x : vars_) x = dist(rng_);
  z_.resize(static_cast<std::size_t>(dim) * dim);
  for (auto& x : z_) x = dist(rng_);
}

u64 eval_matrix_det(const PolyMatrix& pm, const FieldContext& ctx, Mask zeroed) {
  std::vector<u64> values(pm.polys.size(), 0);
  for (std::size_t i = 0; i < pm.polys.size(); ++i) {
    u64 sum = 0;
    for (Mask mono : pm.polys[i].monomials) {
      if (mono & zeroed) continue;
      u64 term = 1;
      for (Mask r = mono; r; r &= r - 1) term = mul_m61(term, ctx.var(lowest_bit(r)));
      sum = add_mod(sum, term, kMersenne61);
    }
    values[i] = sum;
  }
  FieldMatrix a(pm.dim);
  for (int r = 0; r < pm.dim; ++r)
    for (int c = 0; c < pm.dim; ++c) {
      int e = pm.get(r, c);
      if (e >= 0) a.at(r, c) = mul_m61(ctx.z(r, c), values[e]);
    }
  return determinant_mod(std::move(a), kMersenne61);
}

u64 sieve_value(const PolyMatrix& pm, const FieldContext& ctx, Mask J) {
  u64 total = 0;
  // Walk every T ⊆ J, including J itself.
  Mask t = 0;
  for (;;) {
    u64 d = eval_matrix_det(pm, ctx, t);
    total = (popcount(t) & 1) ? sub_mod(total, d, kMersenne61) : add_mod(total, d, kMersenne61);
    if (t == J) break;
    t = (t - J) & J;
  }
  return total;
}

bool sieve_decide(const PolyMatrix& pm, FieldContext& ctx, Mask J, int repeats) {
  check_guard("sieve variable count", popcount(J), Guards::active().sieve_max_vars);
  if (repeats < 1) throw UsageError("repeats must be at least 1");
  for (int rep = 0; rep < repeats; ++rep) {
    ctx.resample(pm.dim, pm.num_vars);
    if (sieve_value(pm, ctx, J) != 0) return true;
  }
  return false;
}

bool domcol_clq(const Graph& g, const VertexSet& m, int ell, const ClqOptions& opt) {
  if (ell <= 0) return g.n() == 0;
  ModulatorView mv(g, m);  // validates m
  ell = std::min(ell, g.n());
  if (static_cast<int>(mv.clique.size()) > ell) return false;
  // Small clique: every vertex may fail to dominate inside Q, so fall back to
  // exact counting on the (at most 2k vertex) graph.
  if (static_cast<int>(mv.clique.size()) <= mv.k()) return domcol_exact(g, ell, opt.seed);
  SupportGraph sg = build_support_domcol(g, m, ell);
  FieldContext ctx(opt.seed);
  return sieve_decide(sg.matrix, ctx, sg.sieve_vars(), opt.repeats);
}

bool cdcol_clq(const Graph& g, const VertexSet& m, int ell, const ClqOptions& opt) {
  if (ell <= 0) return g.n() == 0;
  ell = std::min(ell, g.n());
  SupportGraph sg = build_support_cdcol(g, m, ell);
  if (sg.trivially_no) return false;
  FieldContext ctx(opt.seed);
  return sieve_decide(sg.matrix, ctx, sg.sieve_vars(), opt.repeats);
}

}  // namespace domcol
