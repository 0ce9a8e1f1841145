#include "domcol/exact.hpp"

#include <random>

#include "domcol/errors.hpp"
#include "domcol/field.hpp"
#include "domcol/guards.hpp"

namespace domcol {

PartizationSystem::PartizationSystem(const Graph& g) : n_(g.n()), open_(g.n()), closed_(g.n()) {
  check_guard("partization system vertex count (bitmask limit)", n_, 31);
  for (Vertex v = 0; v < n_; ++v) {
    open_[v] = g.open_mask(v);
    closed_[v] = g.closed_mask(v);
  }
}

bool PartizationSystem::contains(Mask s) const {
  const Mask low = bit(n_) - 1;
  if (s >> (2 * n_)) return false;
  Mask ind = s & low;
  Mask dom = s >> n_;
  for (Mask r = ind; r; r &= r - 1)
    if (open_[lowest_bit(r)] & ind) return false;
  if (dom && !ind) return false;
  for (Mask r = dom; r; r &= r - 1)
    if (ind & ~closed_[lowest_bit(r)]) return false;
  return true;
}

PartizationSystem build_partization_system(const Graph& g) {
  check_guard("exact domcol vertex count", g.n(), Guards::active().exact_domcol_max_n);
  return PartizationSystem(g);
}

std::vector<std::uint64_t> subset_counts(int bits, const std::vector<std::uint8_t>& indicator) {
  const std::size_t size = std::size_t{1} << bits;
  if (indicator.size() != size) throw UsageError("indicator size mismatch");
  std::vector<std::uint64_t> a(indicator.begin(), indicator.end());
  for (int i = 0; i < bits; ++i) {
    const std::size_t b = std::size_t{1} << i;
    for (std::size_t w = 0; w < size; ++w)
      if (w & b) a[w] += a[w ^ b];
  }
  return a;
}

std::uint64_t count_covers_mod(const std::vector<std::uint64_t>& a, int bits, int ell, std::uint64_t p) {
  const std::size_t size = std::size_t{1} << bits;
  u64 total = 0;
  for (std::size_t w = 0; w < size; ++w) {
    u64 term = pow_mod(a[w] % p, static_cast<u64>(ell), p);
    bool negative = (bits - popcount(w)) & 1;
    total = negative ? sub_mod(total, term, p) : add_mod(total, term, p);
  }
  return total;
}

namespace {

bool decide_by_counting(const std::vector<std::uint64_t>& a, int bits, int ell, std::uint64_t seed,
                        ExactTrace* trace) {
  std::mt19937_64 rng(seed);
  bool nonzero = false;
  for (int i = 0; i < 2; ++i) {
    u64 p = random_prime(rng, 62);
    u64 c = count_covers_mod(a, bits, ell, p);
    if (trace) {
      trace->primes[i] = p;
      trace->residues[i] = c;
    }
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

}  // namespace

bool domcol_exact(const Graph& g, int ell, std::uint64_t seed, ExactTrace* trace) {
  const int n = g.n();
  check_guard("exact domcol vertex count", n, Guards::active().exact_domcol_max_n);
  if (n == 0) return ell >= 0;
  if (ell <= 0) return false;
  if (ell >= n) return true;  // singleton classes always work

  PartizationSystem sys(g);
  const int bits = sys.universe_bits();
  std::vector<std::uint8_t> ind(std::size_t{1} << bits);
  for (std::size_t s = 0; s < ind.size(); ++s) ind[s] = sys.contains(s) ? 1 : 0;
  return decide_by_counting(subset_counts(bits, ind), bits, ell, seed, trace);
}

bool cdcol_exact(const Graph& g, int ell, std::uint64_t seed, ExactTrace* trace) {
  const int n = g.n();
  check_guard("exact cdcol vertex count", n, Guards::active().exact_cdcol_max_n);
  check_guard("exact cdcol vertex count (bitmask limit)", n, 30);
  if (n == 0) return ell >= 0;
  if (ell <= 0) return false;
  if (ell >= n) return true;

  std::vector<Mask> open(n), closed(n);
  for (Vertex v = 0; v < n; ++v) {
    open[v] = g.open_mask(v);
    closed[v] = g.closed_mask(v);
  }
  std::vector<std::uint8_t> ind(std::size_t{1} << n, 0);
  for (Mask s = 0; s < ind.size(); ++s) {
    bool independent = true;
    for (Mask r = s; r && independent; r &= r - 1) independent = !(open[lowest_bit(r)] & s);
    if (!independent) continue;
    bool dominated = s == 0;
    for (Vertex u = 0; u < n && !dominated; ++u) dominated = (s & ~closed[u]) == 0;
    ind[s] = dominated ? 1 : 0;
  }
  return decide_by_counting(subset_counts(n, ind), n, ell, seed, trace);
}

}  // namespace domcol
