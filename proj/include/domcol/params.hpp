#pragma once

#include <optional>
#include <string>

#include "domcol/graph.hpp"

namespace domcol {

enum class ParamKind { twin_cover, clique_modulator, cvd_set };

const char* to_string(ParamKind k);

struct ParamResult {
  ParamKind kind;
  VertexSet set;
  int k = 0;
};

// Each finder returns a minimum-size set (lexicographically smallest among the
// minimum ones) if one of size <= budget exists. budget < 0 means "no limit".
std::optional<ParamResult> find_clique_modulator(const Graph& g, int budget = -1);
std::optional<ParamResult> find_cvd_set(const Graph& g, int budget = -1);
std::optional<ParamResult> find_twin_cover(const Graph& g, int budget = -1);
std::optional<ParamResult> find_param(ParamKind kind, const Graph& g, int budget = -1);

bool satisfies(ParamKind kind, const Graph& g, const VertexSet& m);

}  // namespace domcol
