#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domcol/generate.hpp"
#include "domcol/graph.hpp"
#include "json.hpp"

namespace domcol {

enum class Algo { oracle, exact, clq, tc, cvd, autoselect };

Algo parse_algo(const std::string& s);
const char* to_string(Algo a);

struct RunConfig {
  Problem problem = Problem::domcol;
  Algo algo = Algo::autoselect;
  int ell = 0;
  std::optional<VertexSet> param_set;  // modulator / twin cover / CVD set
  std::uint64_t seed = 1;
  int repeats = 3;
};

struct ResultRecord {
  Problem problem = Problem::domcol;
  Algo algo = Algo::oracle;  // the algorithm that actually ran
  int n = 0;
  std::optional<int> k;
  std::optional<std::vector<Vertex>> param_set;
  int ell = 0;
  bool answer = false;
  std::optional<Coloring> witness;
  std::uint64_t seed = 1;
  double time_ms = 0;
};

/// Throws UsageError for incompatible combinations (cvd + domcol) or invalid
/// parameter sets, GuardExceeded when an exponential routine is too large.
ResultRecord solve(const RunConfig& cfg, const Graph& g);

/// {"schema":1, problem, algo, n, k, ell, answer, witness, seed, time_ms}.
/// Witness, when present, holds the coloring and its domination map.
nlohmann::json to_json(const ResultRecord& r, const Graph& g);

struct CrosscheckOptions {
  InstanceGenSpec gen;
  int trials = 0;
  std::uint64_t seed = 1;
  std::vector<Problem> problems{Problem::domcol, Problem::cdcol};
  int repeats = 3;
};

/// Runs the oracle and every applicable solver at ell in {opt-1, opt, opt+1}
/// on generated instances; any disagreement or bad witness is listed.
nlohmann::json crosscheck(const CrosscheckOptions& opt);

struct BenchSpec {
  Algo algo = Algo::exact;
  Problem problem = Problem::domcol;
  std::vector<int> sizes;  // n for oracle/exact, k for clq/tc/cvd
  int clique = 8;          // clique size for clq instances
  double p = 0.5;
  int reps = 3;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::string algo;
  std::string problem;
  int n = 0;
  int k = 0;
  int ell = 0;
  double time_ms = 0;  // minimum over reps
};

std::vector<BenchRow> bench(const std::vector<BenchSpec>& specs);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace domcol
