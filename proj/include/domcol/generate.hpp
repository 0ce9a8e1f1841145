#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "domcol/graph.hpp"

namespace domcol {

enum class InstanceKind { cluster_plus_modulator, twin_cover, cvd, gnp };

InstanceKind parse_instance_kind(const std::string& s);
const char* to_string(InstanceKind k);

/// cluster_plus_modulator: `cliques` cliques plus k modulator vertices joined to
///   single vertices at random (cliques = 1 gives a clique modulator).
/// twin_cover: like cvd, but each modulator vertex sees a whole clique or none.
/// cvd: per-vertex random edges between modulator and cliques.
/// gnp: Erdos-Renyi on n vertices.
struct InstanceGenSpec {
  InstanceKind kind = InstanceKind::gnp;
  int cliques = 1;
  int min_clique = 1;
  int max_clique = 3;
  int k = 1;
  int n = 6;        // gnp only
  double p = 0.5;   // edge probability
  bool shuffle = true;
};

struct GeneratedInstance {
  Graph graph;
  VertexSet modulator;  // the planted modulator (empty for gnp)
};

/// Output satisfies its structural promise; checked before returning.
GeneratedInstance generate(const InstanceGenSpec& spec, std::mt19937_64& rng);

}  // namespace domcol
