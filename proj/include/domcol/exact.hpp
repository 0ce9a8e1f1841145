#pragma once

#include <cstdint>
#include <vector>

#include "domcol/graph.hpp"

namespace domcol {

/// Set system over U = V ∪ V' (bit i is vertex i, bit n+i is its copy i').
/// A set I ∪ D' is a member when I is independent, every copy v' in D'
/// has N[v] ⊇ I, and D' is empty whenever I is.
class PartizationSystem {
 public:
  explicit PartizationSystem(const Graph& g);

  int n() const { return n_; }
  int universe_bits() const { return 2 * n_; }
  bool contains(Mask s) const;

 private:
  int n_;
  std::vector<Mask> open_, closed_;
};

PartizationSystem build_partization_system(const Graph& g);

/// a[W] = number of members S ⊆ W, for every W over `bits` bits, from a
/// membership indicator (in-place zeta transform over subsets).
std::vector<std::uint64_t> subset_counts(int bits, const std::vector<std::uint8_t>& indicator);

/// Number of ordered ell-tuples of members whose union is the whole universe,
/// modulo p: sum over W of (-1)^{|U \ W|} a[W]^ell.
std::uint64_t count_covers_mod(const std::vector<std::uint64_t>& a, int bits, int ell, std::uint64_t p);

/// Primes used by the last exact run, surfaced for diagnostics.
struct ExactTrace {
  std::uint64_t primes[2] = {0, 0};
  std::uint64_t residues[2] = {0, 0};
};

/// chi_d(g) <= ell, by cover counting over the partization system. Counts are
/// reduced modulo two random 62-bit primes drawn from `seed`; a nonzero
/// residue proves a cover exists, so there are no false positives.
bool domcol_exact(const Graph& g, int ell, std::uint64_t seed = 1, ExactTrace* trace = nullptr);

/// chi_cd(g) <= ell, by cover counting over independent dominated sets of V.
bool cdcol_exact(const Graph& g, int ell, std::uint64_t seed = 1, ExactTrace* trace = nullptr);

}  // namespace domcol
