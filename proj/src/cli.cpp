#include "bandwidth/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bandwidth/generators.hpp"
#include "bandwidth/graph.hpp"
#include "bandwidth/mc_analysis.hpp"
#include "bandwidth/report.hpp"
#include "bandwidth/solver.hpp"
#include "bandwidth/state_search.hpp"

namespace bandwidth::cli {

using nlohmann::json;

int exit_code_for(const std::string& status) {
  if (status == "optimal" || status == "yes") return kSuccess;
  if (status == "no") return kNo;
  if (status == "unknown") return kUnknown;
  return kError;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SearchFlags {
  int root = 0;
  int workers = 1;
  std::uint64_t max_run_states = Budget{}.max_states_per_run;
  std::uint64_t max_states = 0;
  double max_seconds = 0.0;
  bool no_prune = false;
  bool json = false;

  Budget budget() const { return {max_run_states, max_states, max_seconds}; }
  SolverOptions options() const { return {root, workers, !no_prune}; }
};

void add_search_flags(CLI::App* cmd, SearchFlags& flags) {
  cmd->add_option("--root", flags.root, "Spanning tree root")->check(CLI::NonNegativeNumber);
  cmd->add_option("--workers", flags.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--max-states", flags.max_states,
                  "Visited-state cap per decision, summed over runs (0: none)");
  cmd->add_option("--max-run-states", flags.max_run_states, "Visited-state cap per search run")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-seconds", flags.max_seconds, "Wall-clock cap (0: none)");
  cmd->add_flag("--no-prune", flags.no_prune, "Disable early edge checks while enumerating");
  cmd->add_flag("--json", flags.json, "Machine-readable output");
}

std::string join_sequence(const Ordering& pi) {
  std::ostringstream out;
  auto seq = pi.vertices_by_position();
  for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? " " : "") << seq[i];
  return out.str();
}

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json run_report(const std::string& command, const std::string& path, const Graph& g,
                const std::string& status, json result, json counters, double ms) {
  return json{{"command", command},
              {"input", {{"path", path}, {"n", g.vertex_count()}, {"m", g.edge_count()}}},
              {"status", status},
              {"result", std::move(result)},
              {"timing_ms", ms},
              {"counters", std::move(counters)}};
}

int cmd_decide(const std::string& path, int b, const SearchFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  Graph g = read_graph_file(path);
  if (b < 0 || (g.vertex_count() > 0 && b >= g.vertex_count())) {
    throw Error("b must satisfy 0 <= b < n");
  }
  DecideResult d = decide_graph(g, b, flags.budget(), flags.options());
  const std::string status = to_string(d.decision);
  if (flags.json) {
    json result{{"b", b}};
    if (d.ordering) result["ordering"] = *d.ordering;
    out << run_report("decide", path, g, status, result, d.stats, millis_since(start)).dump()
        << '\n';
  } else {
    out << status << ": bandwidth <= " << b << (d.decision == Decision::yes ? "" : "?") << '\n';
    if (d.ordering) out << "order: " << join_sequence(*d.ordering) << '\n';
    out << "assignments: " << d.stats.assignments_accepted << " accepted of "
        << d.stats.assignments_generated << ", states: " << d.stats.total_states << '\n';
  }
  return exit_code_for(status);
}

int cmd_solve(const std::string& path, const SearchFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  Graph g = read_graph_file(path);
  if (flags.root >= std::max(1, g.vertex_count())) throw Error("root out of range");
  SolveResult r = minimize_bandwidth(g, flags.budget(), flags.options());
  const std::string status = to_string(r.status);
  if (flags.json) {
    json result = r;
    out << run_report("solve", path, g, status, result, r.stats, millis_since(start)).dump()
        << '\n';
  } else {
    if (r.status == SolveStatus::optimal) {
      out << "bandwidth: " << r.bandwidth << '\n';
    } else {
      out << "bandwidth: unknown, between " << r.lower << " and " << r.bandwidth << '\n';
    }
    out << "order: " << join_sequence(r.ordering) << '\n';
    if (r.components.size() > 1) {
      for (const auto& c : r.components) {
        out << "component of " << c.vertices.size() << " vertices: bandwidth " << c.bandwidth
            << (c.status == SolveStatus::optimal ? "" : " (unproven)") << '\n';
      }
    }
    out << "decisions: " << r.stats.decide_calls << ", states: " << r.stats.total_states
        << ", time: " << r.stats.wall_seconds << " s\n";
  }
  return exit_code_for(status);
}

int cmd_oracle(const std::string& path, int limit, bool as_json, std::ostream& out) {
  const auto start = Clock::now();
  Graph g = read_graph_file(path);
  SolveResult r = oracle_bandwidth(g, limit);
  if (as_json) {
    json result{{"bandwidth", r.bandwidth}, {"ordering", r.ordering}};
    out << run_report("oracle", path, g, "optimal", result,
                      {{"oracle_nodes", r.stats.oracle_nodes}}, millis_since(start))
               .dump()
        << '\n';
  } else {
    out << "bandwidth: " << r.bandwidth << "\norder: " << join_sequence(r.ordering) << '\n';
  }
  return kSuccess;
}

struct AnalyzeFlags {
  std::optional<double> alpha;
  std::optional<double> beta;
  mc::OptimizeParams optimize;
  bool json = false;
};

int cmd_analyze(const AnalyzeFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  mc::McWeights w;
  mc::McBound bound;
  json report;
  if (flags.alpha || flags.beta) {
    w = {flags.alpha.value_or(1.0), flags.beta.value_or(1.0)};
    bound = mc::kappa_for(w, flags.optimize.tol);
    report = mc::report(w, bound);
    report["grid_step"] = nullptr;
  } else {
    auto best = mc::optimize_weights(flags.optimize);
    w = best.weights;
    bound = best.bound;
    report = mc::report(w, bound);
    report["grid_step"] = flags.optimize.grid_step;
    report["refine_step"] = flags.optimize.refine_step;
  }
  if (flags.json) {
    json wrapped{{"command", "analyze"},
                 {"status", "optimal"},
                 {"result", report},
                 {"timing_ms", millis_since(start)}};
    out << wrapped.dump() << '\n';
  } else {
    out.precision(10);
    out << "alpha: " << w.alpha << "\nbeta: " << w.beta << "\nkappa: " << bound.kappa << '\n';
    for (int i = 0; i < mc::kConstraintCount; ++i) {
      out << "  " << mc::constraint_name(static_cast<mc::Constraint>(i))
          << ": root " << bound.roots[i] << ", residual " << bound.residuals[i] << '\n';
    }
    out << "binding:";
    for (auto c : bound.binding) out << ' ' << mc::constraint_name(c);
    out << '\n';
  }
  return kSuccess;
}

struct GenFlags {
  std::string family;
  int size = 1;
  double p = 0.5;
  int legs = 1;
  std::uint64_t seed = 1;
  bool allow_disconnected = false;
  std::string output;
};

int cmd_gen(const GenFlags& flags, std::ostream& out) {
  auto family = family_from_name(flags.family);
  if (!family) throw Error("unknown family '" + flags.family + "'");
  GeneratorParams params;
  params.size = flags.size;
  params.edge_probability = flags.p;
  params.legs = flags.legs;
  params.seed = flags.seed;
  params.connected = !flags.allow_disconnected;
  const std::string text = write_graph(generate(*family, params));
  if (flags.output.empty()) {
    out << text;
  } else {
    std::ofstream file(flags.output);
    if (!(file << text)) throw Error("cannot write '" + flags.output + "'");
  }
  return kSuccess;
}

struct BenchInstance {
  std::string name;
  Graph graph;
};

std::vector<BenchInstance> bench_suite(const std::string& suite) {
  std::vector<BenchInstance> out;
  auto add = [&](Family f, int size, std::uint64_t seed = 1, double p = 0.5, int legs = 1) {
    GeneratorParams params;
    params.size = size;
    params.seed = seed;
    params.edge_probability = p;
    params.legs = legs;
    std::string name = family_name(f) + "-" + std::to_string(size);
    if (f == Family::random_gnp || f == Family::random_tree) name += "-s" + std::to_string(seed);
    out.push_back({name, generate(f, params)});
  };
  if (suite == "small" || suite == "small-suite") {
    for (int n = 4; n <= 8; ++n) add(Family::path, n);
    for (int n = 4; n <= 8; ++n) add(Family::cycle, n);
    for (int m = 3; m <= 7; ++m) add(Family::star, m);
    for (int n = 3; n <= 6; ++n) add(Family::complete, n);
    for (int n = 6; n <= 10; ++n) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) add(Family::random_gnp, n, seed, 0.35);
    }
    for (int n = 6; n <= 10; ++n) add(Family::random_tree, n, 7);
    add(Family::caterpillar, 3, 1, 0.5, 2);
  } else if (suite == "medium" || suite == "medium-suite") {
    for (int n = 11; n <= 14; ++n) {
      for (std::uint64_t seed = 1; seed <= 2; ++seed) add(Family::random_gnp, n, seed, 0.3);
    }
    for (int n = 12; n <= 14; ++n) add(Family::random_tree, n, 3);
    add(Family::caterpillar, 4, 1, 0.5, 2);
  } else {
    throw Error("unknown suite '" + suite + "' (small-suite, medium-suite)");
  }
  return out;
}

int cmd_bench(const std::string& suite, const SearchFlags& flags, bool oracle_check,
              std::ostream& out) {
  bool all_ok = true;
  for (const auto& inst : bench_suite(suite)) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    const int root = std::min(flags.root, n - 1);
    const int leaves = spanning_tree(g, root).leaf_count();
    SearchFlags local = flags;
    local.root = root;
    SolveResult r = minimize_bandwidth(g, local.budget(), local.options());
    const double run_ceiling = per_run_state_ceiling(n, leaves);
    const bool within = r.stats.assignment_bound_violations == 0 &&
                        r.stats.run_bound_violations == 0 &&
                        r.stats.total_bound_violations == 0;
    json line{{"instance", inst.name},
              {"n", n},
              {"m", g.edge_count()},
              {"leaves", leaves},
              {"bandwidth", r.bandwidth},
              {"status", to_string(r.status)},
              {"decide_calls", r.stats.decide_calls},
              {"assignments_generated", r.stats.assignments_generated},
              {"assignments_accepted", r.stats.assignments_accepted},
              {"assignment_ceiling", (n + 1) * std::ldexp(1.0, n - 1)},
              {"states_visited", r.stats.total_states},
              {"max_run_states", r.stats.max_run_states},
              {"run_state_ceiling", run_ceiling},
              {"max_decide_states", r.stats.max_decide_states},
              {"total_state_ceiling", mc::total_state_bound(n, mc::kReferenceKappa).value()},
              {"within_bounds", within},
              {"wall_ms", r.stats.wall_seconds * 1000.0}};
    bool ok = within && r.status == SolveStatus::optimal;
    if (oracle_check && n <= kDefaultOracleLimit) {
      const int expected = oracle_bandwidth(g).bandwidth;
      line["oracle_bandwidth"] = expected;
      ok = ok && expected == r.bandwidth;
    }
    all_ok = all_ok && ok;
    out << line.dump() << '\n';
  }
  return all_ok ? kSuccess : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graph bandwidth solver", "bandwidth"};
  app.require_subcommand(1);

  std::string path;
  int b = 0;
  SearchFlags decide_flags;
  auto* decide = app.add_subcommand("decide", "Is there an ordering of bandwidth at most b?");
  decide->add_option("graph", path, "Edge-list file")->required();
  decide->add_option("--b,-b", b, "Bandwidth bound")->required();
  add_search_flags(decide, decide_flags);

  SearchFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Compute the exact bandwidth");
  solve->add_option("graph", path, "Edge-list file")->required();
  add_search_flags(solve, solve_flags);

  int oracle_limit = kDefaultOracleLimit;
  bool oracle_json = false;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive branch and bound (small graphs)");
  oracle->add_option("graph", path, "Edge-list file")->required();
  oracle->add_option("--limit", oracle_limit, "Largest accepted vertex count");
  oracle->add_flag("--json", oracle_json, "Machine-readable output");

  AnalyzeFlags analyze_flags;
  auto* analyze = app.add_subcommand("analyze", "Branching-base analysis of the state count");
  analyze->add_option("--alpha", analyze_flags.alpha, "Weight alpha in (0, 1]");
  analyze->add_option("--beta", analyze_flags.beta, "Weight beta in (0, 1]");
  analyze->add_option("--grid-step", analyze_flags.optimize.grid_step, "Coarse grid step");
  analyze->add_option("--refine-step", analyze_flags.optimize.refine_step, "Refinement step");
  analyze->add_option("--tol", analyze_flags.optimize.tol, "Root tolerance");
  analyze->add_flag("--json", analyze_flags.json, "Machine-readable output");

  GenFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "Generate a graph in edge-list format");
  gen->add_option("family", gen_flags.family,
                  "path|cycle|complete|star|gnp|tree|caterpillar")
      ->required();
  gen->add_option("size", gen_flags.size, "Vertices (star: leaves, caterpillar: spine)")
      ->required();
  gen->add_option("--p", gen_flags.p, "Edge probability for gnp");
  gen->add_option("--legs", gen_flags.legs, "Leaves per spine vertex for caterpillar");
  gen->add_option("--seed", gen_flags.seed, "Random seed");
  gen->add_flag("--allow-disconnected", gen_flags.allow_disconnected, "Keep disconnected gnp");
  gen->add_option("-o,--output", gen_flags.output, "Output file (default: stdout)");

  std::string suite;
  SearchFlags bench_flags;
  bool bench_oracle = false;
  auto* bench = app.add_subcommand("bench", "Run a generated corpus, one JSON line per instance");
  bench->add_option("suite", suite, "small-suite|medium-suite")->required();
  add_search_flags(bench, bench_flags);
  bench->add_flag("--oracle", bench_oracle, "Cross-check n <= 10 against the oracle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    if (*decide) return cmd_decide(path, b, decide_flags, out);
    if (*solve) return cmd_solve(path, solve_flags, out);
    if (*oracle) return cmd_oracle(path, oracle_limit, oracle_json, out);
    if (*analyze) return cmd_analyze(analyze_flags, out);
    if (*gen) return cmd_gen(gen_flags, out);
    if (*bench) return cmd_bench(suite, bench_flags, bench_oracle, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace bandwidth::cli
