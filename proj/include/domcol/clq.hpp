#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "domcol/field.hpp"
#include "domcol/graph.hpp"

namespace domcol {

/// Sum of multilinear monomials with unit coefficients. Each Mask names the
/// variables of one monomial; the empty mask is the constant 1.
struct EntryPoly {
  std::vector<Mask> monomials;
};

/// Square matrix of polynomial entries. Each present entry is z_(r,c) * P where
/// z_(r,c) is a fresh variable per position; absent entries are 0.
struct PolyMatrix {
  int dim = 0;
  int num_vars = 0;
  std::vector<EntryPoly> polys;  // shared polynomial table
  std::vector<int> entry;        // dim*dim indices into polys, -1 = zero

  PolyMatrix() = default;
  PolyMatrix(int d, int vars) : dim(d), num_vars(vars), entry(static_cast<std::size_t>(d) * d, -1) {}
  int add_poly(EntryPoly p);
  void set(int r, int c, int poly) { entry[static_cast<std::size_t>(r) * dim + c] = poly; }
  int get(int r, int c) const { return entry[static_cast<std::size_t>(r) * dim + c]; }
};

/// The bipartite support graph B as a polynomial matrix. Rows are the graph
/// vertices in id order followed by padding rows; columns are the ell real
/// colors followed by one artificial color per modulator vertex. Variable i is
/// x_{modulator[i]}; for DomCol variable k+i is y_{modulator[i]}.
struct SupportGraph {
  Problem problem = Problem::domcol;
  int ell = 0;
  int k = 0;
  std::vector<Vertex> modulator;
  std::vector<Vertex> clique;
  std::vector<Vertex> row_vertex;  // -1 for padding rows
  PolyMatrix matrix;
  bool trivially_no = false;  // |Q| > ell

  /// Variables the sieve must see: all of X (and Y for DomCol).
  Mask sieve_vars() const;
};

SupportGraph build_support_domcol(const Graph& g, const VertexSet& m, int ell);
SupportGraph build_support_cdcol(const Graph& g, const VertexSet& m, int ell);

/// Random evaluation point over GF(2^61 - 1): one value per variable and per
/// matrix position (the z's).
class FieldContext {
 public:
  explicit FieldContext(std::uint64_t seed);
  void resample(int dim, int num_vars);

  u64 var(int i) const { return vars_[i]; }
  u64 z(int r, int c) const { return z_[static_cast<std::size_t>(r) * dim_ + c]; }
  u64 prime() const { return kMersenne61; }

 private:
  std::mt19937_64 rng_;
  int dim_ = 0;
  std::vector<u64> vars_, z_;
};

/// det A at the sampled point, with the variables in `zeroed` set to 0.
u64 eval_matrix_det(const PolyMatrix& pm, const FieldContext& ctx, Mask zeroed);

/// Sum over T ⊆ J of (-1)^{|T|} det A|_{T->0} at one sampled point.
u64 sieve_value(const PolyMatrix& pm, const FieldContext& ctx, Mask J);

/// True iff some of `repeats` fresh evaluation points gives a nonzero sieve
/// value. Never wrong on "true"; a "false" is wrong with probability at most
/// (d/p)^repeats per instance, d the total degree.
bool sieve_decide(const PolyMatrix& pm, FieldContext& ctx, Mask J, int repeats);

struct ClqOptions {
  std::uint64_t seed = 1;
  int repeats = 3;
};

bool domcol_clq(const Graph& g, const VertexSet& m, int ell, const ClqOptions& opt = {});
bool cdcol_clq(const Graph& g, const VertexSet& m, int ell, const ClqOptions& opt = {});

}  // namespace domcol
