// Command-line front end: solve, oracle, params, gen, crosscheck, bench.
//
// Exit codes: 0 answer produced, 2 usage error, 3 size guard exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "domcol/errors.hpp"
#include "domcol/graph_io.hpp"
#include "domcol/harness.hpp"
#include "domcol/oracle.hpp"
#include "domcol/params.hpp"
#include "domcol/reductions.hpp"
#include "json.hpp"

using namespace domcol;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    auto colon = tok.find(':');
    try {
      if (colon == std::string::npos) {
        out.push_back(std::stoi(tok));
      } else {
        int lo = std::stoi(tok.substr(0, colon)), hi = std::stoi(tok.substr(colon + 1));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  return out;
}

HittingSetInstance read_hitting_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad hitting-set JSON: ") + e.what());
  }
  // Accepts {"universe": n, "family": [[...]], "budget": k}; elements 1-based.
  HittingSetInstance hs;
  try {
    const json& fam = j.is_array() ? j : j.at("family");
    int max_elem = 0;
    for (const auto& f : fam) {
      std::vector<int> member;
      for (const auto& e : f) {
        int v = e.get<int>();
        if (v < 1) throw UsageError("hitting-set elements are 1-based");
        member.push_back(v - 1);
        max_elem = std::max(max_elem, v);
      }
      hs.family.push_back(std::move(member));
    }
    hs.universe = j.is_object() && j.contains("universe") ? j.at("universe").get<int>() : max_elem;
    if (j.is_object() && j.contains("budget")) {
      hs.budget = j.at("budget").get<int>();
    } else if (j.is_object() && j.contains("kappa")) {
      hs.budget = j.at("kappa").get<int>();
    } else {
      throw UsageError("hitting-set JSON needs a \"budget\"");
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad hitting-set JSON: ") + e.what());
  }
  return hs;
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

json param_json(const std::optional<ParamResult>& r) {
  if (!r) return nullptr;
  return json{{"k", r->k}, {"set", r->set.members()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominator coloring and CD coloring solvers"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "decide whether the graph has a coloring with at most L colors");
  std::string graph_path, problem_s = "domcol", algo_s = "auto", set_s;
  int ell = 0, repeats = 3;
  std::uint64_t seed = 1;
  std::string modulator_s, cover_s, cvd_s;
  solve_cmd->add_option("graph", graph_path, "graph file ('-' for stdin)")->required();
  solve_cmd->add_option("--problem", problem_s, "domcol or cdcol")->check(CLI::IsMember({"domcol", "cdcol"}));
  solve_cmd->add_option("--algo", algo_s, "oracle, exact, clq, tc, cvd or auto")
      ->check(CLI::IsMember({"oracle", "exact", "clq", "tc", "cvd", "auto"}));
  solve_cmd->add_option("--ell", ell, "color budget L")->required();
  solve_cmd->add_option("--modulator", modulator_s, "clique modulator, 0-based ids \"1,4\"");
  solve_cmd->add_option("--cover", cover_s, "twin cover, 0-based ids");
  solve_cmd->add_option("--cvd", cvd_s, "cluster vertex deletion set, 0-based ids");
  solve_cmd->add_option("--seed", seed, "random seed");
  solve_cmd->add_option("--repeats", repeats, "independent sieve evaluations");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force optimum with a witness");
  oracle_cmd->add_option("graph", graph_path, "graph file")->required();
  oracle_cmd->add_option("--problem", problem_s, "domcol or cdcol")->check(CLI::IsMember({"domcol", "cdcol"}));

  // params
  auto* params_cmd = app.add_subcommand("params", "minimum twin cover, clique modulator and CVD set");
  int budget = -1;
  params_cmd->add_option("graph", graph_path, "graph file")->required();
  params_cmd->add_option("--budget", budget, "size limit (default: n)");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate or transform instances");
  std::string hs_path, universal_path, out_path, sidecar_path, kind_s = "gnp";
  InstanceGenSpec spec;
  std::uint64_t gen_seed = 1;
  auto* hs_opt = gen_cmd->add_option("--from-hitting-set", hs_path, "hitting-set JSON (1-based elements)");
  auto* uni_opt = gen_cmd->add_option("--universal", universal_path, "add a universal vertex to this graph");
  hs_opt->excludes(uni_opt);
  gen_cmd->add_option("-o,--output", out_path, "graph output file (default stdout)");
  gen_cmd->add_option("--sidecar", sidecar_path, "where to write {ell, cvd_set} (default OUTPUT.json)");
  gen_cmd->add_option("--kind", kind_s, "gnp, cluster-plus-modulator, twin-cover or cvd");
  gen_cmd->add_option("--cliques", spec.cliques, "number of cliques");
  gen_cmd->add_option("--min-clique", spec.min_clique, "smallest clique");
  gen_cmd->add_option("--max-clique", spec.max_clique, "largest clique");
  gen_cmd->add_option("--k", spec.k, "modulator size");
  gen_cmd->add_option("--n", spec.n, "vertex count (gnp)");
  gen_cmd->add_option("--p", spec.p, "edge probability");
  gen_cmd->add_option("--seed", gen_seed, "random seed");

  // crosscheck
  auto* cross_cmd = app.add_subcommand("crosscheck", "compare every applicable solver with the oracle");
  CrosscheckOptions cross;
  std::string cross_kind = "twin-cover";
  cross_cmd->add_option("--kind", cross_kind, "instance kind");
  cross_cmd->add_option("--trials", cross.trials, "number of instances");
  cross_cmd->add_option("--seed", cross.seed, "base seed");
  cross_cmd->add_option("--cliques", cross.gen.cliques, "number of cliques");
  cross_cmd->add_option("--min-clique", cross.gen.min_clique, "smallest clique");
  cross_cmd->add_option("--max-clique", cross.gen.max_clique, "largest clique");
  cross_cmd->add_option("--k", cross.gen.k, "modulator size");
  cross_cmd->add_option("--n", cross.gen.n, "vertex count (gnp)");
  cross_cmd->add_option("--p", cross.gen.p, "edge probability");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "time a solver over a size grid, CSV output");
  BenchSpec bspec;
  std::string bench_algo = "exact", bench_problem = "domcol", sizes_s, bench_out;
  bench_cmd->add_option("--algo", bench_algo, "oracle, exact, clq, tc or cvd");
  bench_cmd->add_option("--problem", bench_problem, "domcol or cdcol");
  bench_cmd->add_option("--sizes", sizes_s, "n (oracle/exact) or k values, e.g. 6:9 or 2,3,4");
  bench_cmd->add_option("--clique", bspec.clique, "clique size for clq instances");
  bench_cmd->add_option("--reps", bspec.reps, "timing repetitions (minimum is reported)");
  bench_cmd->add_option("--seed", bspec.seed, "random seed");
  bench_cmd->add_option("-o,--output", bench_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      Graph g = read_graph_file(graph_path);
      RunConfig cfg;
      cfg.problem = parse_problem(problem_s);
      cfg.algo = parse_algo(algo_s);
      cfg.ell = ell;
      cfg.seed = seed;
      cfg.repeats = repeats;
      int given = !modulator_s.empty() + !cover_s.empty() + !cvd_s.empty();
      if (given > 1) throw UsageError("give at most one of --modulator, --cover, --cvd");
      if (!modulator_s.empty()) cfg.param_set = parse_vertex_list(modulator_s, g.n());
      if (!cover_s.empty()) cfg.param_set = parse_vertex_list(cover_s, g.n());
      if (!cvd_s.empty()) cfg.param_set = parse_vertex_list(cvd_s, g.n());
      ResultRecord r = solve(cfg, g);
      std::cout << to_json(r, g).dump(2) << '\n';
    } else if (*oracle_cmd) {
      Graph g = read_graph_file(graph_path);
      Problem p = parse_problem(problem_s);
      OracleAnswer a = optimum(p, g);
      ResultRecord r;
      r.problem = p;
      r.algo = Algo::oracle;
      r.n = g.n();
      r.ell = a.optimum;
      r.answer = true;
      r.witness = a.coloring;
      json j = to_json(r, g);
      j["optimum"] = a.optimum;
      j.erase("time_ms");
      j.erase("seed");
      std::cout << j.dump(2) << '\n';
    } else if (*params_cmd) {
      Graph g = read_graph_file(graph_path);
      json j;
      j["schema"] = 1;
      j["n"] = g.n();
      j["twin_cover"] = param_json(find_twin_cover(g, budget));
      j["clique_modulator"] = param_json(find_clique_modulator(g, budget));
      j["cvd_set"] = param_json(find_cvd_set(g, budget));
      std::cout << j.dump(2) << '\n';
    } else if (*gen_cmd) {
      if (!hs_path.empty()) {
        HittingSetReduction red = hitting_set_to_domcol(read_hitting_set(hs_path));
        json side{{"ell", red.ell}, {"cvd_set", red.cvd_set.members()}};
        std::string graph_text = to_dimacs(red.graph);
        if (sidecar_path.empty() && !out_path.empty() && out_path != "-") sidecar_path = out_path + ".json";
        if (sidecar_path.empty()) {
          graph_text = "c sidecar " + side.dump() + "\n" + graph_text;
        } else {
          emit_text(side.dump(2) + "\n", sidecar_path);
        }
        emit_text(graph_text, out_path);
      } else if (!universal_path.empty()) {
        emit_text(to_dimacs(add_universal_vertex(read_graph_file(universal_path))), out_path);
      } else {
        spec.kind = parse_instance_kind(kind_s);
        std::mt19937_64 rng(gen_seed);
        GeneratedInstance inst = generate(spec, rng);
        std::string text = to_dimacs(inst.graph);
        if (spec.kind != InstanceKind::gnp) {
          text = "c modulator " + json(inst.modulator.members()).dump() + "\n" + text;
        }
        emit_text(text, out_path);
      }
    } else if (*cross_cmd) {
      cross.gen.kind = parse_instance_kind(cross_kind);
      json report = crosscheck(cross);
      std::cout << report.dump(2) << '\n';
      return report["disagreements"].empty() ? 0 : 1;
    } else if (*bench_cmd) {
      bspec.algo = parse_algo(bench_algo);
      bspec.problem = parse_problem(bench_problem);
      bspec.sizes = parse_int_list(sizes_s);
      emit_text(bench_csv(bench({bspec})), bench_out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
