#include "domcol/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "domcol/clq.hpp"
#include "domcol/cvd.hpp"
#include "domcol/errors.hpp"
#include "domcol/exact.hpp"
#include "domcol/graph_io.hpp"
#include "domcol/guards.hpp"
#include "domcol/oracle.hpp"
#include "domcol/params.hpp"
#include "domcol/tc.hpp"

namespace domcol {

using nlohmann::json;

Algo parse_algo(const std::string& s) {
  if (s == "oracle") return Algo::oracle;
  if (s == "exact") return Algo::exact;
  if (s == "clq") return Algo::clq;
  if (s == "tc") return Algo::tc;
  if (s == "cvd") return Algo::cvd;
  if (s == "auto") return Algo::autoselect;
  throw UsageError("unknown algorithm '" + s + "'");
}

const char* to_string(Algo a) {
  switch (a) {
    case Algo::oracle: return "oracle";
    case Algo::exact: return "exact";
    case Algo::clq: return "clq";
    case Algo::tc: return "tc";
    case Algo::cvd: return "cvd";
    case Algo::autoselect: return "auto";
  }
  return "?";
}

namespace {

// Largest parameter the automatic choice hands to each FPT solver.
constexpr int kAutoClqMax = 6;
constexpr int kAutoTcMax = 5;
constexpr int kAutoCvdMax = 3;

VertexSet param_or_find(const RunConfig& cfg, const Graph& g, ParamKind kind) {
  if (cfg.param_set) {
    if (cfg.param_set->universe() != g.n()) throw UsageError("parameter set over wrong vertex range");
    if (!satisfies(kind, g, *cfg.param_set)) {
      throw UsageError(std::string("given set is not a valid ") + to_string(kind));
    }
    return *cfg.param_set;
  }
  return find_param(kind, g)->set;
}

Algo choose_algo(const RunConfig& cfg, const Graph& g, std::optional<VertexSet>& chosen) {
  const Guards& guards = Guards::active();
  if (auto r = find_clique_modulator(g, kAutoClqMax)) {
    // DomCol with |Q| <= k falls back to exact counting inside domcol_clq.
    bool falls_back = cfg.problem == Problem::domcol && g.n() - r->k <= r->k;
    if (!falls_back || g.n() <= guards.exact_domcol_max_n) {
      chosen = r->set;
      return Algo::clq;
    }
  }
  if (auto r = find_twin_cover(g, kAutoTcMax)) {
    chosen = r->set;
    return Algo::tc;
  }
  if (cfg.problem == Problem::cdcol) {
    if (auto r = find_cvd_set(g, kAutoCvdMax)) {
      chosen = r->set;
      return Algo::cvd;
    }
  }
  int exact_max = cfg.problem == Problem::domcol ? guards.exact_domcol_max_n : guards.exact_cdcol_max_n;
  if (g.n() <= exact_max) return Algo::exact;
  return Algo::oracle;  // guarded; raises if too large
}

}  // namespace

ResultRecord solve(const RunConfig& cfg, const Graph& g) {
  if (cfg.algo == Algo::cvd && cfg.problem == Problem::domcol) {
    throw UsageError("unsupported: use exact (the CVD solver handles cdcol only)");
  }
  if (cfg.ell < 0) throw UsageError("ell must be non-negative");
  if (cfg.repeats < 1) throw UsageError("repeats must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  ResultRecord rec;
  rec.problem = cfg.problem;
  rec.n = g.n();
  rec.ell = cfg.ell;
  rec.seed = cfg.seed;

  std::optional<VertexSet> set = cfg.param_set;
  Algo algo = cfg.algo;
  if (algo == Algo::autoselect) {
    RunConfig plain = cfg;
    plain.param_set.reset();
    std::optional<VertexSet> found;
    algo = choose_algo(plain, g, found);
    // A user-supplied set is kept when it fits the chosen solver.
    if (!(set && (algo == Algo::clq   ? is_clique_modulator(g, *set)
                  : algo == Algo::tc  ? is_twin_cover(g, *set)
                  : algo == Algo::cvd ? is_cvd_set(g, *set)
                                      : true))) {
      set = found;
    }
  }
  rec.algo = algo;

  RunConfig eff = cfg;
  eff.param_set = set;
  switch (algo) {
    case Algo::oracle: {
      auto w = at_most(cfg.problem, g, cfg.ell);
      rec.answer = w.has_value();
      if (w) rec.witness = w->coloring;
      break;
    }
    case Algo::exact:
      rec.answer = cfg.problem == Problem::domcol ? domcol_exact(g, cfg.ell, cfg.seed)
                                                  : cdcol_exact(g, cfg.ell, cfg.seed);
      break;
    case Algo::clq: {
      VertexSet m = param_or_find(eff, g, ParamKind::clique_modulator);
      ClqOptions opt{cfg.seed, cfg.repeats};
      rec.answer = cfg.problem == Problem::domcol ? domcol_clq(g, m, cfg.ell, opt) : cdcol_clq(g, m, cfg.ell, opt);
      rec.k = m.size();
      rec.param_set = m.members();
      break;
    }
    case Algo::tc: {
      VertexSet m = param_or_find(eff, g, ParamKind::twin_cover);
      SolveResult r = cfg.problem == Problem::domcol ? domcol_tc(g, m, cfg.ell) : cdcol_tc(g, m, cfg.ell);
      rec.answer = r.answer;
      rec.witness = r.witness;
      rec.k = m.size();
      rec.param_set = m.members();
      break;
    }
    case Algo::cvd: {
      VertexSet m = param_or_find(eff, g, ParamKind::cvd_set);
      SolveResult r = cdcol_cvd(g, m, cfg.ell);
      rec.answer = r.answer;
      rec.witness = r.witness;
      rec.k = m.size();
      rec.param_set = m.members();
      break;
    }
    case Algo::autoselect:
      throw std::logic_error("unresolved algorithm");
  }
  rec.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

json to_json(const ResultRecord& r, const Graph& g) {
  json j;
  j["schema"] = 1;
  j["problem"] = to_string(r.problem);
  j["algo"] = to_string(r.algo);
  j["n"] = r.n;
  j["k"] = r.k ? json(*r.k) : json(nullptr);
  if (r.param_set) j["param_set"] = *r.param_set;
  j["ell"] = r.ell;
  j["answer"] = r.answer;
  if (r.witness) {
    json w;
    w["coloring"] = r.witness->colors;
    if (auto dw = validate(r.problem, g, *r.witness)) {
      if (r.problem == Problem::domcol) {
        w["dominated"] = dw->dominated;
      } else {
        json dom = json::object();
        for (const auto& [c, v] : dw->dominator) dom[std::to_string(c)] = v;
        w["dominator"] = dom;
      }
    }
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["seed"] = r.seed;
  j["time_ms"] = r.time_ms;
  return j;
}

json crosscheck(const CrosscheckOptions& opt) {
  json report;
  report["schema"] = 1;
  report["kind"] = to_string(opt.gen.kind);
  report["trials"] = opt.trials;
  report["seed"] = opt.seed;
  json disagreements = json::array();
  long checks = 0;
  const Guards& guards = Guards::active();

  for (int t = 0; t < opt.trials; ++t) {
    const std::uint64_t inst_seed = opt.seed + static_cast<std::uint64_t>(t);
    std::mt19937_64 rng(inst_seed);
    GeneratedInstance inst = generate(opt.gen, rng);
    const Graph& g = inst.graph;

    std::optional<VertexSet> clq_set, tc_set, cvd_set;
    if (is_clique_modulator(g, inst.modulator)) {
      clq_set = inst.modulator;
    } else if (auto r = find_clique_modulator(g, 4)) {
      clq_set = r->set;
    }
    if (opt.gen.kind != InstanceKind::gnp && is_twin_cover(g, inst.modulator)) {
      tc_set = inst.modulator;
    } else if (auto r = find_twin_cover(g, 4)) {
      tc_set = r->set;
    }
    if (opt.gen.kind != InstanceKind::gnp && is_cvd_set(g, inst.modulator)) {
      cvd_set = inst.modulator;
    } else if (auto r = find_cvd_set(g, 3)) {
      cvd_set = r->set;
    }

    for (Problem p : opt.problems) {
      const int best = optimum(p, g).optimum;
      for (int ell = std::max(0, best - 1); ell <= best + 1; ++ell) {
        const bool expected = ell >= best;
        auto record = [&](const char* algo, bool got, const std::string& note) {
          ++checks;
          if (got == expected && note.empty()) return;
          disagreements.push_back({{"trial", t},
                                   {"instance_seed", inst_seed},
                                   {"problem", to_string(p)},
                                   {"algo", algo},
                                   {"ell", ell},
                                   {"expected", expected},
                                   {"got", got},
                                   {"note", note},
                                   {"graph", to_dimacs(g)}});
        };
        auto witness_note = [&](const SolveResult& r) -> std::string {
          if (!r.answer) return "";
          if (!r.witness) return "missing witness";
          if (!validate(p, g, *r.witness)) return "invalid witness";
          if (r.witness->num_colors() > ell) return "witness uses too many colors";
          return "";
        };

        int exact_max = p == Problem::domcol ? guards.exact_domcol_max_n : guards.exact_cdcol_max_n;
        if (g.n() <= exact_max) {
          bool got = p == Problem::domcol ? domcol_exact(g, ell, inst_seed) : cdcol_exact(g, ell, inst_seed);
          record("exact", got, "");
        }
        if (clq_set) {
          ClqOptions co{inst_seed, opt.repeats};
          bool got = p == Problem::domcol ? domcol_clq(g, *clq_set, ell, co) : cdcol_clq(g, *clq_set, ell, co);
          record("clq", got, "");
        }
        if (tc_set) {
          SolveResult r = p == Problem::domcol ? domcol_tc(g, *tc_set, ell) : cdcol_tc(g, *tc_set, ell);
          record("tc", r.answer, witness_note(r));
        }
        if (cvd_set && p == Problem::cdcol) {
          SolveResult r = cdcol_cvd(g, *cvd_set, ell);
          record("cvd", r.answer, witness_note(r));
        }
      }
    }
  }
  report["checks"] = checks;
  report["disagreements"] = disagreements;
  return report;
}

namespace {

double time_once(const std::function<void()>& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<BenchRow> bench(const std::vector<BenchSpec>& specs) {
  std::vector<BenchRow> rows;
  for (const BenchSpec& s : specs) {
    if (s.algo == Algo::autoselect) throw UsageError("bench needs a concrete algorithm");
    if (s.algo == Algo::cvd && s.problem == Problem::domcol) throw UsageError("unsupported: use exact");
    for (int size : s.sizes) {
      std::mt19937_64 rng(s.seed + static_cast<std::uint64_t>(size));
      InstanceGenSpec gen;
      gen.p = s.p;
      switch (s.algo) {
        case Algo::oracle:
        case Algo::exact:
          gen.kind = InstanceKind::gnp;
          gen.n = size;
          break;
        case Algo::clq:
          gen.kind = InstanceKind::cluster_plus_modulator;
          gen.cliques = 1;
          gen.min_clique = gen.max_clique = s.clique;
          gen.k = size;
          break;
        case Algo::tc:
        case Algo::cvd:
          gen.kind = s.algo == Algo::tc ? InstanceKind::twin_cover : InstanceKind::cvd;
          gen.cliques = 2;
          gen.min_clique = 1;
          gen.max_clique = 3;
          gen.k = size;
          break;
        case Algo::autoselect:
          break;
      }
      GeneratedInstance inst = generate(gen, rng);
      const Graph& g = inst.graph;
      // Mid-range ell; the exponential cost does not depend on the answer.
      int ell = std::max(1, g.n() / 2);
      if (s.algo == Algo::clq) ell = g.n();  // a yes instance: one sieve pass

      BenchRow row{to_string(s.algo), to_string(s.problem), g.n(),
                   s.algo == Algo::oracle || s.algo == Algo::exact ? 0 : size, ell, 0};
      double best = -1;
      for (int rep = 0; rep < std::max(1, s.reps); ++rep) {
        double ms = time_once([&] {
          switch (s.algo) {
            case Algo::oracle: (void)at_most(s.problem, g, ell); break;
            case Algo::exact:
              (void)(s.problem == Problem::domcol ? domcol_exact(g, ell, s.seed) : cdcol_exact(g, ell, s.seed));
              break;
            case Algo::clq: {
              ClqOptions co{s.seed, 1};
              (void)(s.problem == Problem::domcol ? domcol_clq(g, inst.modulator, ell, co)
                                                  : cdcol_clq(g, inst.modulator, ell, co));
              break;
            }
            case Algo::tc:
              (void)(s.problem == Problem::domcol ? domcol_tc(g, inst.modulator, ell)
                                                  : cdcol_tc(g, inst.modulator, ell));
              break;
            case Algo::cvd: (void)cdcol_cvd(g, inst.modulator, ell); break;
            case Algo::autoselect: break;
          }
        });
        best = best < 0 ? ms : std::min(best, ms);
      }
      row.time_ms = best;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "algo,problem,n,k,ell,time_ms\n";
  for (const BenchRow& r : rows) {
    out << r.algo << ',' << r.problem << ',' << r.n << ',' << r.k << ',' << r.ell << ',' << r.time_ms << '\n';
  }
  return out.str();
}

}  // namespace domcol
